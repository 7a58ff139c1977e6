#include <doctest.h>

#include <random>

#include "toric/catalog.hpp"
#include "toric/collections.hpp"

using namespace toric;

namespace {

OrderedCollection line_bundles(const FanPtr& fan, const std::vector<int>& degrees) {
    std::vector<Vec> classes;
    for (int k : degrees) {
        Vec c(fan->ray_count());
        c.back() = k;
        classes.push_back(std::move(c));
    }
    return make_collection(fan, std::move(classes));
}

}  // namespace

TEST_CASE("the standard collection on P2") {
    const FanPtr p2 = catalog::projective_space(2);
    const CollectionReport rep = check_collection(line_bundles(p2, {0, 1, 2}));
    CHECK(rep.is_exceptional);
    CHECK(rep.is_strongly_exceptional);
    CHECK(rep.length_equals_k0_rank);
    CHECK(rep.gram_unitriangular);
    CHECK(rep.length == 3);
    // chi(O(j), O(k)) = C(2 + k - j, 2)
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k)
            CHECK(rep.gram[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] ==
                  binomial(2 + k - j, 2));
}

TEST_CASE("reversing a pair breaks exceptionality") {
    const FanPtr p2 = catalog::projective_space(2);
    const CollectionReport rep = check_collection(line_bundles(p2, {2, 0}));
    CHECK_FALSE(rep.is_exceptional);
    CHECK_FALSE(rep.is_strongly_exceptional);
    // the backward Hom is h^0(O(2)) = 6
    CHECK(rep.ext[1][0][0] == 6);
}

TEST_CASE("a degree gap on P1 breaks the backward vanishing") {
    const FanPtr p1 = catalog::projective_space(1);
    CHECK(check_collection(line_bundles(p1, {0, 1})).is_strongly_exceptional);

    // Ext^1(O(2), O) = h^1(O(-2)) = 1
    const CollectionReport wide = check_collection(line_bundles(p1, {0, 2}));
    CHECK_FALSE(wide.is_exceptional);
    CHECK(wide.ext[1][0][1] == 1);
}

TEST_CASE("box collection on P1xP1") {
    const auto prod =
        catalog::product(catalog::projective_space(1), catalog::projective_space(1));
    const auto c = catalog::box_collection(
        prod, catalog::beilinson_collection(prod.fiber),
        catalog::beilinson_collection(prod.base));
    CHECK(c.size() == 4);
    const CollectionReport rep = check_collection(c);
    CHECK(rep.is_strongly_exceptional);
    CHECK(rep.length_equals_k0_rank);
    CHECK(rep.gram_unitriangular);
}

TEST_CASE("collections must have distinct classes") {
    const FanPtr p1 = catalog::projective_space(1);
    // (k, 0) and (0, k) are the same class on P1
    std::vector<Vec> classes = {{2, 0}, {0, 2}};
    CHECK_THROWS_AS(make_collection(p1, std::move(classes)), PreconditionError);
}

TEST_CASE("global twist") {
    const FanPtr p2 = catalog::projective_space(2);
    const OrderedCollection c = line_bundles(p2, {0, 1, 2});

    const OrderedCollection same = global_twist(c, Vec(3));
    CHECK(same.classes == c.classes);

    Vec five(3);
    five.back() = 5;
    const OrderedCollection shifted = global_twist(c, five);
    CHECK(shifted.classes == line_bundles(p2, {5, 6, 7}).classes);
    CHECK(check_collection(shifted).is_strongly_exceptional);

    const OrderedCollection back = global_twist(shifted, Int(-1) * five);
    CHECK(back.classes == c.classes);
}

TEST_CASE("twist invariance of all verdicts") {
    std::mt19937 rng(53);
    std::uniform_int_distribution<int> entry(-3, 3);
    struct Case {
        OrderedCollection coll;
    };
    std::vector<OrderedCollection> cases;
    cases.push_back(catalog::beilinson_collection(catalog::projective_space(2)));
    cases.push_back(line_bundles(catalog::projective_space(1), {0, -2}));  // negative case
    {
        const auto f2 = catalog::hirzebruch(2);
        cases.push_back(catalog::hirzebruch_collection(f2));
    }
    for (const auto& c : cases) {
        const CollectionReport ref = check_collection(c);
        for (int trial = 0; trial < 5; ++trial) {
            Vec l(c.fan->ray_count());
            for (Int& x : l) x = entry(rng);
            const CollectionReport rep = check_collection(global_twist(c, l));
            CHECK(rep.is_exceptional == ref.is_exceptional);
            CHECK(rep.is_strongly_exceptional == ref.is_strongly_exceptional);
            CHECK(rep.length_equals_k0_rank == ref.length_equals_k0_rank);
            CHECK(rep.gram_unitriangular == ref.gram_unitriangular);
        }
    }
}

TEST_CASE("fibration collection synthesis on products") {
    const auto prod =
        catalog::product(catalog::projective_space(1), catalog::projective_space(1));
    Vec step_coeffs(prod.base->ray_count());
    step_coeffs[static_cast<std::size_t>(prod.base_pic.free_rays[0])] = 1;
    const auto res = synthesize_fibration_collection(
        prod, catalog::beilinson_collection(prod.fiber),
        catalog::beilinson_collection(prod.base), {prod.base, step_coeffs}, 8);
    CHECK(res.t >= 1);
    CHECK(res.report.is_strongly_exceptional);
    CHECK(res.report.length == 4);
    CHECK(res.collection.size() == euler_characteristic(*prod.total));
    CHECK_FALSE(res.fullness.empty());
}

TEST_CASE("fibration collection synthesis on Hirzebruch surfaces") {
    for (int a : {1, 2, 3}) {
        const auto f = catalog::hirzebruch(a);
        Vec step_coeffs(f.base->ray_count());
        step_coeffs[static_cast<std::size_t>(f.base_pic.free_rays[0])] = 1;
        const auto res = synthesize_fibration_collection(
            f, catalog::beilinson_collection(f.fiber), catalog::beilinson_collection(f.base),
            {f.base, step_coeffs}, 8);
        CHECK(res.report.is_strongly_exceptional);
        CHECK(res.report.length_equals_k0_rank);
        CHECK(res.collection.size() == 4);
        // regression: the first scale already works on these surfaces
        CHECK(res.t == 1);
    }
}

TEST_CASE("monotone stabilization of the twist scale on the catalog") {
    const auto f = catalog::hirzebruch(2);
    Vec step_coeffs(f.base->ray_count());
    step_coeffs[static_cast<std::size_t>(f.base_pic.free_rays[0])] = 1;
    const Divisor step{f.base, step_coeffs};
    const auto fiber_coll = catalog::beilinson_collection(f.fiber);
    const auto base_coll = catalog::beilinson_collection(f.base);
    const auto res = synthesize_fibration_collection(f, fiber_coll, base_coll, step, 8);
    // every scale from the first success up to the cap also verifies
    for (int t = res.t; t <= 4; ++t) {
        std::vector<Vec> classes;
        for (std::size_t k = 1; k <= fiber_coll.size(); ++k) {
            Vec fiber_cls = fiber_coll.classes[k - 1];
            const Divisor lift = lift_from_fiber(f, {f.fiber, fiber_cls});
            for (std::size_t j = 0; j < base_coll.size(); ++j) {
                const Vec tw = base_coll.classes[j] +
                               (Int(static_cast<long>(k) * t) * step).coeffs;
                classes.push_back((pullback_from_base(f, {f.base, tw}) + lift).coeffs);
            }
        }
        CHECK(check_collection(make_collection(f.total, std::move(classes)))
                  .is_strongly_exceptional);
    }
}

TEST_CASE("the search cap converts non-termination into an error") {
    // a hopeless step divisor: the negative of a fiber class cannot be fixed
    const auto f = catalog::hirzebruch(1);
    Vec bad(f.base->ray_count());
    bad[static_cast<std::size_t>(f.base_pic.free_rays[0])] = -1;
    CHECK_THROWS_AS(
        synthesize_fibration_collection(f, catalog::beilinson_collection(f.fiber),
                                        catalog::beilinson_collection(f.base),
                                        {f.base, bad}, 3),
        SearchExhausted);
    try {
        synthesize_fibration_collection(f, catalog::beilinson_collection(f.fiber),
                                        catalog::beilinson_collection(f.base), {f.base, bad},
                                        3);
    } catch (const SearchExhausted& e) {
        CHECK(e.cap == 3);
        CHECK(e.best.length == 4);
    }
}

TEST_CASE("non-strongly-exceptional inputs are rejected") {
    const auto f = catalog::hirzebruch(1);
    Vec step(f.base->ray_count());
    step[static_cast<std::size_t>(f.base_pic.free_rays[0])] = 1;
    const OrderedCollection bad_fiber = line_bundles(f.fiber, {0, -2});
    CHECK_THROWS_AS(
        synthesize_fibration_collection(f, bad_fiber, catalog::beilinson_collection(f.base),
                                        {f.base, step}, 3),
        PreconditionError);
}
