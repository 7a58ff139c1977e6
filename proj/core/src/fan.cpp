#include "toric/fan.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace toric {

namespace {

constexpr std::size_t kMaxRays = 31;  // ray subsets are tracked in a 32-bit mask

std::string join(const std::vector<int>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
    return os.str();
}

Mat cone_matrix(const FanData& d, const std::vector<int>& cone) {
    std::vector<Vec> cols;
    cols.reserve(cone.size());
    for (int r : cone) cols.push_back(d.rays[static_cast<std::size_t>(r)]);
    return Mat::from_cols(cols);
}

bool structure_check(const FanData& d, ValidationReport& rep) {
    auto fail = [&](std::string msg) {
        rep.failures.push_back(std::move(msg));
        return false;
    };
    if (d.rank < 1) return fail("rank must be at least 1");
    if (d.rays.size() > kMaxRays) return fail("more than 31 rays are not supported");
    if (d.rays.empty()) return fail("no rays");
    if (d.max_cones.empty()) return fail("no maximal cones");
    for (std::size_t i = 0; i < d.rays.size(); ++i) {
        if (d.rays[i].size() != static_cast<std::size_t>(d.rank))
            return fail("ray " + std::to_string(i) + " has wrong dimension");
        if (is_zero(d.rays[i])) return fail("ray " + std::to_string(i) + " is zero");
    }
    for (std::size_t i = 0; i < d.rays.size(); ++i)
        for (std::size_t j = i + 1; j < d.rays.size(); ++j)
            if (d.rays[i] == d.rays[j])
                return fail("rays " + std::to_string(i) + " and " + std::to_string(j) +
                            " coincide");
    std::set<std::vector<int>> seen;
    std::vector<bool> used(d.rays.size(), false);
    for (std::size_t c = 0; c < d.max_cones.size(); ++c) {
        std::vector<int> cone = d.max_cones[c];
        if (cone.size() != static_cast<std::size_t>(d.rank))
            return fail("maximal cone " + std::to_string(c) + " does not have rank-many rays");
        for (int r : cone) {
            if (r < 0 || static_cast<std::size_t>(r) >= d.rays.size())
                return fail("maximal cone " + std::to_string(c) + " has ray index out of range");
            used[static_cast<std::size_t>(r)] = true;
        }
        std::sort(cone.begin(), cone.end());
        if (std::adjacent_find(cone.begin(), cone.end()) != cone.end())
            return fail("maximal cone " + std::to_string(c) + " repeats a ray");
        if (!seen.insert(cone).second)
            return fail("maximal cone " + std::to_string(c) + " duplicates another cone");
    }
    for (std::size_t i = 0; i < used.size(); ++i)
        if (!used[i]) return fail("ray " + std::to_string(i) + " lies in no maximal cone");
    return true;
}

}  // namespace

std::string ValidationReport::describe() const {
    std::ostringstream os;
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    os << "structure: " << yn(structure) << ", primitive: " << yn(primitive)
       << ", smooth: " << yn(smooth) << ", faces: " << yn(faces)
       << ", complete: " << yn(complete);
    for (const auto& f : failures) os << "\n  " << f;
    return os.str();
}

FanError::FanError(ValidationReport r)
    : Error("invalid fan: " + r.describe()), report(std::move(r)) {}

ValidationReport Fan::check(const FanData& input) {
    ValidationReport rep;
    rep.structure = structure_check(input, rep);
    if (!rep.structure) return rep;

    FanData d = input;
    for (auto& cone : d.max_cones) std::sort(cone.begin(), cone.end());
    const std::size_t n = static_cast<std::size_t>(d.rank);

    rep.primitive = true;
    for (std::size_t i = 0; i < d.rays.size(); ++i)
        if (content(d.rays[i]) != 1) {
            rep.primitive = false;
            rep.failures.push_back("ray " + std::to_string(i) + " is not primitive");
        }

    rep.smooth = true;
    for (std::size_t c = 0; c < d.max_cones.size(); ++c) {
        const Int det = determinant(cone_matrix(d, d.max_cones[c]));
        if (det != 1 && det != -1) {
            rep.smooth = false;
            rep.failures.push_back("maximal cone " + std::to_string(c) + " (rays " +
                                   join(d.max_cones[c]) + ") is not smooth");
        }
    }
    if (!rep.smooth) {  // duals below need unimodular cones
        rep.failures.push_back("face and completeness checks skipped (fan not smooth)");
        return rep;
    }

    // Face-intersection property: a separating character that vanishes
    // exactly on the shared rays, is >= 1 on the rest of one cone and
    // <= -1 on the rest of the other. Rational feasibility via lattice-core.
    rep.faces = true;
    for (std::size_t a = 0; a < d.max_cones.size() && rep.faces; ++a)
        for (std::size_t b = a + 1; b < d.max_cones.size(); ++b) {
            std::vector<int> shared;
            std::set_intersection(d.max_cones[a].begin(), d.max_cones[a].end(),
                                  d.max_cones[b].begin(), d.max_cones[b].end(),
                                  std::back_inserter(shared));
            Polyhedron sys(n);
            for (int r : shared) sys.add_eq(d.rays[static_cast<std::size_t>(r)], 0);
            for (int r : d.max_cones[a])
                if (!std::binary_search(shared.begin(), shared.end(), r))
                    sys.add_ge(d.rays[static_cast<std::size_t>(r)], 1);
            for (int r : d.max_cones[b])
                if (!std::binary_search(shared.begin(), shared.end(), r))
                    sys.add_le(d.rays[static_cast<std::size_t>(r)], -1);
            if (!feasible(sys)) {
                rep.faces = false;
                rep.failures.push_back("maximal cones " + std::to_string(a) + " and " +
                                       std::to_string(b) + " do not meet in a common face");
                break;
            }
        }

    // Completeness: facet pairing, connected dual graph, and a battery of
    // random integer points that must each lie in some cone.
    rep.complete = true;
    std::map<std::vector<int>, std::vector<std::size_t>> facet_owners;
    for (std::size_t c = 0; c < d.max_cones.size(); ++c)
        for (std::size_t k = 0; k < n; ++k) {
            std::vector<int> facet = d.max_cones[c];
            facet.erase(facet.begin() + static_cast<std::ptrdiff_t>(k));
            facet_owners[facet].push_back(c);
        }
    for (const auto& [facet, owners] : facet_owners)
        if (owners.size() != 2) {
            rep.complete = false;
            rep.failures.push_back("facet {" + join(facet) + "} lies in " +
                                   std::to_string(owners.size()) + " maximal cones, expected 2");
        }
    if (rep.complete) {
        std::vector<std::size_t> comp(d.max_cones.size());
        for (std::size_t c = 0; c < comp.size(); ++c) comp[c] = c;
        std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
            while (comp[x] != x) x = comp[x] = comp[comp[x]];
            return x;
        };
        for (const auto& [facet, owners] : facet_owners)
            comp[find(owners[0])] = find(owners[1]);
        for (std::size_t c = 0; c < comp.size(); ++c)
            if (find(c) != find(0)) {
                rep.complete = false;
                rep.failures.push_back("dual graph of maximal cones is disconnected");
                break;
            }
    }
    if (rep.complete) {
        std::vector<Mat> duals;
        duals.reserve(d.max_cones.size());
        for (const auto& cone : d.max_cones) duals.push_back(inverse_unimodular(cone_matrix(d, cone)));
        std::mt19937 rng(0xC0FFEE);
        std::uniform_int_distribution<int> coord(-97, 97);
        for (int trial = 0; trial < 20; ++trial) {
            Vec p(n);
            do
                for (std::size_t i = 0; i < n; ++i) p[i] = coord(rng);
            while (is_zero(p));
            bool covered = false;
            for (std::size_t c = 0; c < d.max_cones.size() && !covered; ++c) {
                const Vec coords = duals[c].apply(p);
                covered = std::all_of(coords.begin(), coords.end(),
                                      [](const Int& x) { return x >= 0; });
            }
            if (!covered) {
                std::ostringstream os;
                os << "sample point (";
                for (std::size_t i = 0; i < n; ++i) os << (i ? " " : "") << p[i];
                os << ") lies in no maximal cone";
                rep.complete = false;
                rep.failures.push_back(os.str());
                break;
            }
        }
    }
    return rep;
}

Fan::Fan(FanData data, std::vector<Mat> duals, std::vector<std::uint32_t> masks)
    : data_(std::move(data)), duals_(std::move(duals)), masks_(std::move(masks)) {}

FanPtr Fan::make(FanData data) {
    ValidationReport rep = check(data);
    if (!rep.ok()) throw FanError(std::move(rep));
    for (auto& cone : data.max_cones) std::sort(cone.begin(), cone.end());
    std::vector<Mat> duals;
    std::vector<std::uint32_t> masks;
    duals.reserve(data.max_cones.size());
    masks.reserve(data.max_cones.size());
    for (const auto& cone : data.max_cones) {
        duals.push_back(inverse_unimodular(cone_matrix(data, cone)));
        std::uint32_t m = 0;
        for (int r : cone) m |= 1u << r;
        masks.push_back(m);
    }
    return FanPtr(new Fan(std::move(data), std::move(duals), std::move(masks)));
}

std::uint32_t Fan::full_mask() const {
    return static_cast<std::uint32_t>((1ull << ray_count()) - 1);
}

bool Fan::is_face(std::uint32_t mask) const {
    for (std::uint32_t cm : masks_)
        if ((mask & cm) == mask) return true;
    return false;
}

std::optional<std::pair<std::size_t, Vec>> Fan::locate(const Vec& v) const {
    for (std::size_t c = 0; c < max_cones().size(); ++c) {
        Vec coords = duals_[c].apply(v);
        if (std::all_of(coords.begin(), coords.end(), [](const Int& x) { return x >= 0; }))
            return std::make_pair(c, std::move(coords));
    }
    return std::nullopt;
}

namespace {

void require_same_fan(const Divisor& a, const Divisor& b) {
    if (a.fan != b.fan)
        throw PreconditionError("divisors live on different fans");
}

}  // namespace

Divisor operator+(const Divisor& a, const Divisor& b) {
    require_same_fan(a, b);
    return {a.fan, a.coeffs + b.coeffs};
}

Divisor operator-(const Divisor& a, const Divisor& b) {
    require_same_fan(a, b);
    return {a.fan, a.coeffs - b.coeffs};
}

Divisor operator*(const Int& c, const Divisor& a) { return {a.fan, c * a.coeffs}; }

Divisor canonical_divisor(FanPtr fan) {
    Vec ones(fan->ray_count(), Int(1));
    return {std::move(fan), std::move(ones)};
}

Vec character_divisor(const Fan& fan, const Vec& m) {
    Vec d(fan.ray_count());
    for (std::size_t i = 0; i < fan.ray_count(); ++i) d[i] = dot(m, fan.ray(i));
    return d;
}

PicBasis pic_basis(FanPtr fan, int base_cone) {
    if (base_cone < 0 || static_cast<std::size_t>(base_cone) >= fan->max_cones().size())
        throw PreconditionError("pic_basis: base cone index out of range");
    PicBasis pic;
    pic.fan = fan;
    pic.base_cone = base_cone;
    pic.basis_rays = fan->max_cones()[static_cast<std::size_t>(base_cone)];
    for (int r = 0; r < static_cast<int>(fan->ray_count()); ++r)
        if (!std::binary_search(pic.basis_rays.begin(), pic.basis_rays.end(), r))
            pic.free_rays.push_back(r);
    const Mat& dual = fan->cone_dual(static_cast<std::size_t>(base_cone));
    pic.relations = Mat(pic.basis_rays.size(), pic.free_rays.size());
    for (std::size_t i = 0; i < pic.basis_rays.size(); ++i)
        for (std::size_t j = 0; j < pic.free_rays.size(); ++j)
            pic.relations(i, j) =
                -dot(dual.row(i), fan->ray(static_cast<std::size_t>(pic.free_rays[j])));
    return pic;
}

Vec canonical_representation(const PicBasis& pic, const Vec& coeffs) {
    const Fan& fan = *pic.fan;
    if (coeffs.size() != fan.ray_count())
        throw PreconditionError("canonical_representation: wrong coefficient count");
    // subtract div(chi^m) for the character agreeing with coeffs on the
    // basis rays
    const Mat& dual = fan.cone_dual(static_cast<std::size_t>(pic.base_cone));
    Vec m(fan.rank());
    for (std::size_t k = 0; k < pic.basis_rays.size(); ++k) {
        const Vec mk = dual.row(k);
        const Int& c = coeffs[static_cast<std::size_t>(pic.basis_rays[k])];
        for (std::size_t t = 0; t < m.size(); ++t) m[t] += c * mk[t];
    }
    Vec out(fan.ray_count());
    for (std::size_t i = 0; i < fan.ray_count(); ++i)
        out[i] = coeffs[i] - dot(m, fan.ray(i));
    return out;
}

Divisor canonical_representation(const PicBasis& pic, const Divisor& d) {
    if (d.fan != pic.fan) throw PreconditionError("divisor is not on the basis fan");
    return {d.fan, canonical_representation(pic, d.coeffs)};
}

std::vector<PrimitiveRelation> primitive_collections(const Fan& fan) {
    const std::size_t s = fan.ray_count();
    std::vector<std::uint32_t> found_masks;
    std::vector<PrimitiveRelation> out;

    std::vector<std::vector<std::uint32_t>> by_size(s + 1);
    for (std::uint32_t m = 1; m < (1u << s); ++m)
        by_size[static_cast<std::size_t>(std::popcount(m))].push_back(m);

    for (std::size_t size = 2; size <= s; ++size)
        for (std::uint32_t m : by_size[size]) {
            if (fan.is_face(m)) continue;
            bool skip = false;
            for (std::uint32_t f : found_masks)
                if ((m & f) == f) {
                    skip = true;
                    break;
                }
            if (skip) continue;
            bool minimal = true;
            for (std::size_t v = 0; v < s && minimal; ++v)
                if (m & (1u << v)) minimal = fan.is_face(m & ~(1u << v));
            if (!minimal) continue;

            found_masks.push_back(m);
            PrimitiveRelation rel;
            Vec sum(static_cast<std::size_t>(fan.rank()));
            for (std::size_t v = 0; v < s; ++v)
                if (m & (1u << v)) {
                    rel.collection.push_back(static_cast<int>(v));
                    sum = sum + fan.ray(v);
                }
            auto hit = fan.locate(sum);
            if (!hit)
                throw Error("primitive relation: ray sum escapes the fan support");
            const auto& cone = fan.max_cones()[hit->first];
            for (std::size_t k = 0; k < cone.size(); ++k)
                if (hit->second[k] > 0) {  // relative-interior normalization
                    rel.support_rays.push_back(cone[k]);
                    rel.coefficients.push_back(hit->second[k]);
                }
            out.push_back(std::move(rel));
        }
    return out;
}

std::size_t euler_characteristic(const Fan& fan) { return fan.max_cones().size(); }

std::vector<Int> poincare_polynomial(const Fan& fan) {
    const std::size_t n = static_cast<std::size_t>(fan.rank());
    // cone counts by dimension: all faces of all maximal cones
    std::set<std::uint32_t> faces;
    for (std::size_t c = 0; c < fan.max_cones().size(); ++c) {
        const std::uint32_t m = fan.cone_mask(c);
        std::uint32_t sub = m;
        while (true) {
            faces.insert(sub);
            if (sub == 0) break;
            sub = (sub - 1) & m;
        }
    }
    std::vector<Int> d(n + 1);
    for (std::uint32_t f : faces) d[static_cast<std::size_t>(std::popcount(f))] += 1;

    std::vector<Int> p(2 * n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        Int b = 0;
        for (std::size_t i = k; i <= n; ++i) {
            const Int term = binomial(static_cast<long>(i), static_cast<long>(k)) * d[n - i];
            b += ((i - k) % 2 == 0) ? term : -term;
        }
        p[2 * k] = b;
    }
    return p;
}

}  // namespace toric
