#include <doctest.h>

#include "toric/catalog.hpp"
#include "toric/collections.hpp"

using namespace toric;

TEST_CASE("projective space fans") {
    const FanPtr p1 = catalog::projective_space(1);
    CHECK(p1->ray_count() == 2);
    CHECK(p1->max_cones().size() == 2);

    const FanPtr p2 = catalog::projective_space(2);
    CHECK(p2->ray_count() == 3);
    CHECK(p2->max_cones().size() == 3);

    const FanPtr p3 = catalog::projective_space(3);
    CHECK(p3->ray_count() == 4);
    CHECK(euler_characteristic(*p3) == 4);

    CHECK_THROWS_AS(catalog::projective_space(0), PreconditionError);
}

TEST_CASE("products") {
    const auto p1xp1 =
        catalog::product(catalog::projective_space(1), catalog::projective_space(1));
    CHECK(p1xp1.total->ray_count() == 4);
    CHECK(p1xp1.total->max_cones().size() == 4);

    const auto p1xp2 =
        catalog::product(catalog::projective_space(1), catalog::projective_space(2));
    CHECK(p1xp2.total->ray_count() == 5);
    CHECK(p1xp2.total->max_cones().size() == 6);
    const auto box = catalog::box_collection(p1xp2,
                                             catalog::beilinson_collection(p1xp2.fiber),
                                             catalog::beilinson_collection(p1xp2.base));
    CHECK(box.size() == 6);
}

TEST_CASE("hirzebruch family") {
    const auto f0 = catalog::hirzebruch(0);
    CHECK(f0.total->ray(3) == Vec{0, -1});

    const auto f1 = catalog::hirzebruch(1);
    const auto v = verify_fibration(f1.total, {0, 1});
    REQUIRE(v);
    CHECK(v.bundle->twist(0, 0) == 1);

    const auto f3 = catalog::hirzebruch(3);
    CHECK(Fan::check(f3.total->data()).ok());
    CHECK(euler_characteristic(*f3.total) == 4);
}

TEST_CASE("every catalog object validates and its collection verifies") {
    std::vector<catalog::Entry> entries;
    for (int n = 1; n <= 4; ++n) entries.push_back(*catalog::make("pn", {n}));
    entries.push_back(*catalog::make("product", {1, 1}));
    entries.push_back(*catalog::make("product", {1, 2}));
    for (int a = 0; a <= 5; ++a) entries.push_back(*catalog::make("hirzebruch", {a}));
    entries.push_back(*catalog::make("p1-over-p2", {1}));

    for (const auto& e : entries) {
        const FanPtr fan = e.main_fan();
        CHECK(Fan::check(fan->data()).ok());
        if (e.bundle) CHECK(rank_k0_check(*e.bundle));
        if (e.reference) {
            const CollectionReport rep = check_collection(*e.reference);
            CHECK(rep.is_strongly_exceptional);
            CHECK(rep.length == euler_characteristic(*fan));
        }
    }
}

TEST_CASE("unknown catalog names are rejected") {
    CHECK_FALSE(catalog::make("blowup", {1}).has_value());
    CHECK_FALSE(catalog::make("pn", {}).has_value());
}
