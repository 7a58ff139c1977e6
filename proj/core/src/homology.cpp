#include "toric/homology.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace toric {

bool HomologyProfile::zero() const {
    return std::all_of(dims.begin(), dims.end(), [](std::int64_t d) { return d == 0; });
}

std::int64_t HomologyProfile::total() const {
    std::int64_t t = 0;
    for (std::int64_t d : dims) t += d;
    return t;
}

bool HomologyProfile::operator==(const HomologyProfile& o) const {
    const std::size_t n = std::max(dims.size(), o.dims.size());
    for (std::size_t k = 0; k < n; ++k)
        if (dim(static_cast<int>(k) - 1) != o.dim(static_cast<int>(k) - 1)) return false;
    return true;
}

SupportComplex support_complex(const Fan& fan, std::uint32_t nonneg_rays) {
    SupportComplex c;
    c.vertex_universe = fan.ray_count();
    c.vertices = nonneg_rays & fan.full_mask();

    // Candidate facets are the intersections of maximal cones with the
    // non-negative rays; keep the maximal ones.
    std::set<std::uint32_t> gens;
    for (std::size_t k = 0; k < fan.max_cones().size(); ++k) {
        const std::uint32_t g = fan.cone_mask(k) & c.vertices;
        if (g) gens.insert(g);
    }
    for (std::uint32_t g : gens) {
        bool maximal = true;
        for (std::uint32_t h : gens)
            if (h != g && (g & h) == g) {
                maximal = false;
                break;
            }
        if (maximal) c.facets.push_back(g);
    }
    for (std::uint32_t f : c.facets)
        c.max_dim = std::max(c.max_dim, std::popcount(f) - 1);
    return c;
}

namespace {

// All faces of dimension q (q+1 vertices), sorted by mask.
std::vector<std::uint32_t> faces_of_dim(const SupportComplex& c, int q) {
    std::set<std::uint32_t> out;
    const int want = q + 1;
    for (std::uint32_t facet : c.facets) {
        if (std::popcount(facet) < want) continue;
        std::uint32_t sub = facet;
        while (true) {
            if (std::popcount(sub) == want) out.insert(sub);
            if (sub == 0) break;
            sub = (sub - 1) & facet;
        }
    }
    return {out.begin(), out.end()};
}

std::size_t boundary_rank(const std::vector<std::uint32_t>& lower,
                          const std::vector<std::uint32_t>& upper) {
    if (lower.empty() || upper.empty()) return 0;
    Mat b(lower.size(), upper.size());
    for (std::size_t j = 0; j < upper.size(); ++j) {
        const std::uint32_t face = upper[j];
        int sign = 1;
        for (std::uint32_t v = 0; v < 32; ++v) {
            if (!(face & (1u << v))) continue;
            const std::uint32_t sub = face & ~(1u << v);
            const auto it = std::lower_bound(lower.begin(), lower.end(), sub);
            b(static_cast<std::size_t>(it - lower.begin()), j) = sign;
            sign = -sign;
        }
    }
    return rank(std::move(b));
}

}  // namespace

HomologyProfile reduced_homology(const SupportComplex& c) {
    HomologyProfile p;
    p.dims.assign(static_cast<std::size_t>(c.max_dim) + 2, 0);

    // chain groups from the empty face (degree -1) upward
    std::vector<std::vector<std::uint32_t>> faces(static_cast<std::size_t>(c.max_dim) + 2);
    faces[0] = {0};  // the empty face
    for (int q = 0; q <= c.max_dim; ++q) faces[static_cast<std::size_t>(q) + 1] = faces_of_dim(c, q);

    // ranks[k] = rank of the boundary map from degree k-1 chains to degree
    // k-2 chains; ranks[0] is the rank of the map out of the empty face (0).
    std::vector<std::size_t> ranks(faces.size() + 1, 0);
    for (std::size_t k = 1; k < faces.size(); ++k)
        ranks[k] = boundary_rank(faces[k - 1], faces[k]);

    for (std::size_t k = 0; k < faces.size(); ++k)
        p.dims[k] = static_cast<std::int64_t>(faces[k].size()) -
                    static_cast<std::int64_t>(ranks[k]) -
                    static_cast<std::int64_t>(k + 1 < faces.size() ? ranks[k + 1] : 0);
    return p;
}

}  // namespace toric
