#include <doctest.h>

#include <random>

#include "toric/catalog.hpp"
#include "toric/cohomology.hpp"

using namespace toric;

namespace {

Divisor on_last_ray(const FanPtr& fan, int k) {
    Vec c(fan->ray_count());
    c.back() = k;
    return {fan, std::move(c)};
}

std::vector<FanPtr> catalog_fans() {
    return {
        catalog::projective_space(1),
        catalog::projective_space(2),
        catalog::projective_space(3),
        catalog::product(catalog::projective_space(1), catalog::projective_space(1)).total,
        catalog::product(catalog::projective_space(1), catalog::projective_space(2)).total,
        catalog::hirzebruch(1).total,
        catalog::hirzebruch(3).total,
        catalog::p1_bundle_over_p2(1).total,
    };
}

}  // namespace

TEST_CASE("O(2) on P2") {
    const FanPtr p2 = catalog::projective_space(2);
    const CohomologyTable t = cohomology(on_last_ray(p2, 2));
    CHECK(t.h == std::vector<Int>{6, 0, 0});
    REQUIRE(t.ledger.size() == 1);
    CHECK(t.ledger[0].pattern == p2->full_mask());
    CHECK(t.ledger[0].points == 6);
}

TEST_CASE("O(-3) on P2") {
    const FanPtr p2 = catalog::projective_space(2);
    const CohomologyTable t = cohomology(on_last_ray(p2, -3));
    CHECK(t.h == std::vector<Int>{0, 0, 1});
    REQUIRE(t.ledger.size() == 1);
    CHECK(t.ledger[0].pattern == 0);
}

TEST_CASE("structure sheaf") {
    for (const FanPtr& fan : catalog_fans()) {
        const CohomologyTable t = cohomology({fan, Vec(fan->ray_count())});
        CHECK(t.h[0] == 1);
        for (std::size_t i = 1; i < t.h.size(); ++i) CHECK(t.h[i] == 0);
        REQUIRE(t.ledger.size() == 1);
        CHECK(t.ledger[0].pattern == fan->full_mask());
        CHECK(t.ledger[0].points == 1);  // only m = 0
    }
}

TEST_CASE("acyclicity on P1") {
    const FanPtr p1 = catalog::projective_space(1);
    CHECK(is_acyclic(on_last_ray(p1, -1)));
    CHECK_FALSE(is_acyclic(on_last_ray(p1, -2)));
    CHECK(is_acyclic({p1, Vec(2)}));
    const CohomologyTable t = cohomology(on_last_ray(p1, -2));
    CHECK(t.h == std::vector<Int>{0, 1});
}

TEST_CASE("representation independence") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> entry(-4, 4);
    for (const FanPtr& fan : catalog_fans()) {
        Vec base(fan->ray_count());
        for (Int& x : base) x = entry(rng);
        const CohomologyTable ref = cohomology({fan, base});
        for (int trial = 0; trial < 10; ++trial) {
            Vec m(static_cast<std::size_t>(fan->rank()));
            for (Int& x : m) x = entry(rng);
            const CohomologyTable shifted = cohomology({fan, base + character_divisor(*fan, m)});
            CHECK(shifted.h == ref.h);
        }
    }
}

TEST_CASE("Serre duality on the catalog") {
    for (const FanPtr& fan : catalog_fans()) {
        const PicBasis pic = pic_basis(fan);
        const std::size_t p = pic.free_rays.size();
        if (p > 2) continue;
        const Divisor k_x = Int(-1) * canonical_divisor(fan);
        std::vector<Vec> coeff_vectors;
        if (p == 1) {
            for (int a = -4; a <= 4; ++a) coeff_vectors.push_back({Int(a)});
        } else {
            for (int a = -4; a <= 4; ++a)
                for (int b = -4; b <= 4; ++b) coeff_vectors.push_back({Int(a), Int(b)});
        }
        for (const Vec& cv : coeff_vectors) {
            Vec coeffs(fan->ray_count());
            for (std::size_t j = 0; j < p; ++j)
                coeffs[static_cast<std::size_t>(pic.free_rays[j])] = cv[j];
            const Divisor l{fan, coeffs};
            const std::vector<Int> hl = cohomology(l).h;
            const std::vector<Int> hd = cohomology(k_x - l).h;
            for (std::size_t i = 0; i < hl.size(); ++i)
                CHECK(hl[i] == hd[hd.size() - 1 - i]);
        }
    }
}

TEST_CASE("euler pairing") {
    const FanPtr p1 = catalog::projective_space(1);
    const Divisor o{p1, Vec(2)};
    for (int k = -1; k <= 4; ++k)
        CHECK(euler_pairing(o, on_last_ray(p1, k)) == k + 1);

    const FanPtr p2 = catalog::projective_space(2);
    const Divisor a = on_last_ray(p2, 2);
    CHECK(euler_pairing(a, a) == 1);
    CHECK(euler_pairing({p2, Vec(3)}, on_last_ray(p2, -3)) == 1);
}

TEST_CASE("decompose_representation splits a product plainly") {
    const auto prod =
        catalog::product(catalog::projective_space(1), catalog::projective_space(1));
    const Vec r = {1, -2, 0, 3};
    const Divisor d{prod.total, r};
    const auto dec = decompose_representation(prod, d, r);
    CHECK(dec.fiber_part == Vec{1, -2});
    CHECK(dec.base_part == Vec{0, 3});
    CHECK(is_zero(dec.twist_correction.coeffs));
}

TEST_CASE("decompose_representation on a Hirzebruch surface") {
    const auto f = catalog::hirzebruch(2);
    const Vec r = {1, 0, 0, 0};
    const Divisor d{f.total, r};
    const auto dec = decompose_representation(f, d, r);
    CHECK(dec.fiber_part == Vec{1, 0});
    CHECK(dec.base_part == Vec{0, 0});
    // correction carries coefficient a on the base free ray
    CHECK(dec.twist_correction.coeffs == Vec{0, 2});

    // the fiber part represents the fiber restriction, and the base part
    // represents the base class shifted by the correction
    const PicBasis fpic = f.fiber_pic;
    CHECK(canonical_representation(fpic, dec.fiber_part) ==
          restrict_to_fiber(f, d).coeffs);
    const Vec canon = canonical_representation(f.total_pic, r);
    Vec base_class(f.base->ray_count());
    for (std::size_t j = 0; j < base_class.size(); ++j)
        base_class[j] = canon[static_cast<std::size_t>(f.base_to_total[j])];
    CHECK(canonical_representation(f.base_pic, dec.base_part) ==
          canonical_representation(f.base_pic, base_class + dec.twist_correction.coeffs));
}

TEST_CASE("decompose_representation identities on random representations") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> entry(-3, 3);
    for (const auto& b : {catalog::hirzebruch(1), catalog::hirzebruch(3),
                          catalog::p1_bundle_over_p2(1),
                          catalog::product(catalog::projective_space(1),
                                           catalog::projective_space(2))}) {
        for (int trial = 0; trial < 25; ++trial) {
            Vec r(b.total->ray_count());
            for (Int& x : r) x = entry(rng);
            const Divisor d{b.total, r};
            const auto dec = decompose_representation(b, d, r);
            CHECK(canonical_representation(b.fiber_pic, dec.fiber_part) ==
                  restrict_to_fiber(b, d).coeffs);
            const Vec canon = canonical_representation(b.total_pic, r);
            Vec base_class(b.base->ray_count());
            for (std::size_t j = 0; j < base_class.size(); ++j)
                base_class[j] = canon[static_cast<std::size_t>(b.base_to_total[j])];
            CHECK(canonical_representation(b.base_pic, dec.base_part) ==
                  canonical_representation(b.base_pic,
                                           base_class + dec.twist_correction.coeffs));
        }
    }
}

TEST_CASE("base-only representations decompose trivially") {
    const auto f = catalog::hirzebruch(3);
    const Vec r = {0, 0, 2, -1};
    const auto dec = decompose_representation(f, {f.total, r}, r);
    CHECK(is_zero(dec.fiber_part));
    CHECK(is_zero(dec.twist_correction.coeffs));
    CHECK(dec.base_part == Vec{2, -1});
}

TEST_CASE("decompose_representation rejects mismatched classes") {
    const auto f = catalog::hirzebruch(1);
    const Divisor d{f.total, Vec{1, 0, 0, 0}};
    CHECK_THROWS_AS(decompose_representation(f, d, Vec{0, 0, 0, 1}), PreconditionError);
}

TEST_CASE("Kunneth check") {
    const auto prod =
        catalog::product(catalog::projective_space(1), catalog::projective_space(1));
    CHECK(kunneth_check(prod, {0, 0, 0, 0}));
    CHECK(kunneth_check(prod, {-1, -1, 0, 0}));

    std::mt19937 rng(37);
    std::uniform_int_distribution<int> entry(-3, 3);
    const auto f1 = catalog::hirzebruch(1);
    for (int trial = 0; trial < 50; ++trial) {
        Vec r(f1.total->ray_count());
        for (Int& x : r) x = entry(rng);
        CHECK(kunneth_check(f1, r));
    }
}

TEST_CASE("Kunneth at the cohomology level on products") {
    // box bundles: dims on the product equal the convolution of factor dims
    for (int n2 : {1, 2}) {
        const FanPtr a = catalog::projective_space(1);
        const FanPtr b = catalog::projective_space(n2);
        const auto prod = catalog::product(a, b);
        for (int i = -4; i <= 4; ++i)
            for (int j = -4; j <= 4; ++j) {
                Vec ca(a->ray_count());
                ca.back() = i;
                Vec cb(b->ray_count());
                cb.back() = j;
                const std::vector<Int> ha = cohomology({a, ca}).h;
                const std::vector<Int> hb = cohomology({b, cb}).h;
                const Divisor box = lift_from_fiber(prod, {a, ca}) +
                                    pullback_from_base(prod, {b, cb});
                const std::vector<Int> hx = cohomology(box).h;
                for (std::size_t p = 0; p < hx.size(); ++p) {
                    Int conv = 0;
                    for (std::size_t q = 0; q < ha.size(); ++q)
                        if (p >= q && p - q < hb.size()) conv += ha[q] * hb[p - q];
                    CHECK(hx[p] == conv);
                }
            }
    }
}

TEST_CASE("acyclic pullback") {
    const auto fa = catalog::hirzebruch(2);
    const Divisor minus_one = on_last_ray(fa.fiber, -1);
    Vec h(fa.base->ray_count());
    h.back() = 5;
    CHECK(acyclic_pullback_check(fa, minus_one, {fa.base, h}));
    h.back() = -7;
    CHECK(acyclic_pullback_check(fa, minus_one, {fa.base, h}));

    const auto prod =
        catalog::product(catalog::projective_space(1), catalog::projective_space(2));
    Vec hp(prod.base->ray_count());
    hp.back() = 3;
    CHECK(acyclic_pullback_check(prod, on_last_ray(prod.fiber, -1), {prod.base, hp}));

    // precondition violations are reported
    CHECK_THROWS_AS(acyclic_pullback_check(fa, on_last_ray(fa.fiber, 1), {fa.base, h}),
                    PreconditionError);
    CHECK_THROWS_AS(acyclic_pullback_check(fa, on_last_ray(fa.fiber, -2), {fa.base, h}),
                    PreconditionError);
}

TEST_CASE("Kunneth and decomposition hold on recognized bundles too") {
    // a hand-written surface, base rays listed first
    FanData scrambled;
    scrambled.rank = 2;
    scrambled.name = "scrambled";
    scrambled.rays = {{0, 1}, {2, -1}, {1, 0}, {-1, 0}};
    scrambled.max_cones = {{0, 2}, {0, 3}, {1, 2}, {1, 3}};
    const auto v = verify_fibration(Fan::make(scrambled), {2, 3});
    REQUIRE(v);
    const FibrationBundle& b = *v.bundle;

    std::mt19937 rng(61);
    std::uniform_int_distribution<int> entry(-3, 3);
    for (int trial = 0; trial < 25; ++trial) {
        Vec r(b.total->ray_count());
        for (Int& x : r) x = entry(rng);
        CHECK(kunneth_check(b, r));
        const Divisor d{b.total, r};
        const auto dec = decompose_representation(b, d, r);
        CHECK(canonical_representation(b.fiber_pic, dec.fiber_part) ==
              restrict_to_fiber(b, d).coeffs);
    }
}

TEST_CASE("h0 and hn attribution in the ledger") {
    std::mt19937 rng(41);
    std::uniform_int_distribution<int> entry(-5, 5);
    for (const FanPtr& fan : catalog_fans()) {
        const int n = fan->rank();
        for (int trial = 0; trial < 20; ++trial) {
            Vec c(fan->ray_count());
            for (Int& x : c) x = entry(rng);
            const CohomologyTable t = cohomology({fan, c});
            for (const auto& contrib : t.ledger) {
                if (contrib.homology.dim(n - 1) > 0) CHECK(contrib.pattern == fan->full_mask());
                if (contrib.homology.dim(-1) > 0) CHECK(contrib.pattern == 0);
            }
        }
    }
}
