#include <doctest.h>

#include <bit>
#include <set>

#include "toric/catalog.hpp"
#include "toric/homology.hpp"

using namespace toric;

namespace {

std::vector<FanPtr> small_catalog() {
    return {
        catalog::projective_space(1),
        catalog::projective_space(2),
        catalog::projective_space(3),
        catalog::product(catalog::projective_space(1), catalog::projective_space(1)).total,
        catalog::hirzebruch(2).total,
    };
}

// reduced Euler characteristic straight from the face counts
std::int64_t reduced_euler(const SupportComplex& c) {
    std::set<std::uint32_t> faces;
    for (std::uint32_t facet : c.facets) {
        std::uint32_t sub = facet;
        while (true) {
            faces.insert(sub);
            if (sub == 0) break;
            sub = (sub - 1) & facet;
        }
    }
    faces.insert(0);
    std::int64_t e = 0;
    for (std::uint32_t f : faces) e += (std::popcount(f) % 2 == 0) ? -1 : 1;  // sign of (-1)^(dim)
    return e;
}

}  // namespace

TEST_CASE("support complexes on P2") {
    const FanPtr p2 = catalog::projective_space(2);

    const SupportComplex full = support_complex(*p2, 0b111);
    CHECK(full.vertices == 0b111);
    CHECK(full.facets.size() == 3);  // the triangle boundary
    CHECK(full.max_dim == 1);

    const SupportComplex empty = support_complex(*p2, 0);
    CHECK(empty.facets.empty());
    CHECK(empty.max_dim == -1);

    const SupportComplex edge = support_complex(*p2, 0b011);
    REQUIRE(edge.facets.size() == 1);
    CHECK(edge.facets[0] == 0b011);
}

TEST_CASE("reduced homology of the empty complex") {
    const FanPtr p2 = catalog::projective_space(2);
    const HomologyProfile h = reduced_homology(support_complex(*p2, 0));
    CHECK(h.dim(-1) == 1);
    CHECK(h.dim(0) == 0);
    CHECK(h.dim(1) == 0);
    CHECK(h.total() == 1);
}

TEST_CASE("two isolated vertices") {
    const FanPtr p1 = catalog::projective_space(1);
    const HomologyProfile h = reduced_homology(support_complex(*p1, 0b11));
    CHECK(h.dim(-1) == 0);
    CHECK(h.dim(0) == 1);
}

TEST_CASE("triangle boundary is a circle") {
    const FanPtr p2 = catalog::projective_space(2);
    const HomologyProfile h = reduced_homology(support_complex(*p2, 0b111));
    CHECK(h.dim(-1) == 0);
    CHECK(h.dim(0) == 0);
    CHECK(h.dim(1) == 1);
}

TEST_CASE("contractible supports vanish") {
    const FanPtr p2 = catalog::projective_space(2);
    for (std::uint32_t mask : {0b001u, 0b010u, 0b011u, 0b101u, 0b110u})
        CHECK(reduced_homology(support_complex(*p2, mask)).zero());
}

TEST_CASE("full support of a complete fan is a sphere") {
    for (const FanPtr& fan : small_catalog()) {
        const HomologyProfile h =
            reduced_homology(support_complex(*fan, fan->full_mask()));
        for (int q = -1; q < fan->rank() - 1; ++q) CHECK(h.dim(q) == 0);
        CHECK(h.dim(fan->rank() - 1) == 1);
    }
}

TEST_CASE("alternating sum equals the reduced Euler characteristic") {
    for (const FanPtr& fan : small_catalog()) {
        const std::uint32_t top = fan->full_mask();
        for (std::uint32_t mask = 0; mask <= top; ++mask) {
            const SupportComplex c = support_complex(*fan, mask);
            const HomologyProfile h = reduced_homology(c);
            std::int64_t alt = 0;
            for (int q = -1; q <= c.max_dim; ++q)
                alt += (q % 2 == 0) ? h.dim(q) : -h.dim(q);
            CHECK(alt == reduced_euler(c));
        }
    }
}

TEST_CASE("homology is invariant under vertex relabeling") {
    // the same fan with rays listed in a different order
    FanData a, b;
    a.rank = b.rank = 2;
    a.name = "A";
    b.name = "B";
    a.rays = {{1, 0}, {0, 1}, {-1, -1}};
    a.max_cones = {{0, 1}, {1, 2}, {0, 2}};
    b.rays = {{-1, -1}, {1, 0}, {0, 1}};
    b.max_cones = {{1, 2}, {0, 2}, {0, 1}};
    const FanPtr fa = Fan::make(a);
    const FanPtr fb = Fan::make(b);
    // relabeling: vertex i of A is vertex (i+1) mod 3 of B
    for (std::uint32_t mask = 0; mask < 8; ++mask) {
        std::uint32_t relabeled = 0;
        for (int v = 0; v < 3; ++v)
            if (mask & (1u << v)) relabeled |= 1u << ((v + 1) % 3);
        CHECK(reduced_homology(support_complex(*fa, mask)) ==
              reduced_homology(support_complex(*fb, relabeled)));
    }
}
