#include "toric/catalog.hpp"

#include <algorithm>

namespace toric::catalog {

FanPtr projective_space(int n) {
    if (n < 1) throw PreconditionError("projective_space: dimension must be at least 1");
    FanData d;
    d.rank = n;
    d.name = "P" + std::to_string(n);
    for (int i = 0; i < n; ++i) {
        Vec e(static_cast<std::size_t>(n));
        e[static_cast<std::size_t>(i)] = 1;
        d.rays.push_back(std::move(e));
    }
    Vec last(static_cast<std::size_t>(n), Int(-1));
    d.rays.push_back(std::move(last));
    for (int drop = n; drop >= 0; --drop) {
        std::vector<int> cone;
        for (int i = 0; i <= n; ++i)
            if (i != drop) cone.push_back(i);
        d.max_cones.push_back(std::move(cone));
    }
    return Fan::make(std::move(d));
}

OrderedCollection beilinson_collection(const FanPtr& pn) {
    const int n = pn->rank();
    std::vector<Vec> classes;
    for (int k = 0; k <= n; ++k) {
        Vec c(pn->ray_count());
        c.back() = k;
        classes.push_back(std::move(c));
    }
    return make_collection(pn, std::move(classes));
}

FibrationBundle product(FanPtr f1, FanPtr f2) {
    const std::string name = f1->name() + "x" + f2->name();
    Mat twist(static_cast<std::size_t>(f1->rank()),
              f2->ray_count() - static_cast<std::size_t>(f2->rank()));
    return build_fibration(std::move(f1), std::move(f2), std::move(twist), 0, 0, name);
}

OrderedCollection box_collection(const FibrationBundle& prod, const OrderedCollection& c1,
                                 const OrderedCollection& c2) {
    if (c1.fan != prod.fiber || c2.fan != prod.base)
        throw PreconditionError("box_collection: collections do not match the factors");
    std::vector<Vec> classes;
    for (const Vec& e2 : c2.classes)
        for (const Vec& e1 : c1.classes)
            classes.push_back((lift_from_fiber(prod, {prod.fiber, e1}) +
                               pullback_from_base(prod, {prod.base, e2}))
                                  .coeffs);
    return make_collection(prod.total, std::move(classes));
}

FibrationBundle hirzebruch(int a) {
    if (a < 0) throw PreconditionError("hirzebruch: twist must be non-negative");
    Mat twist(1, 1);
    twist(0, 0) = a;
    return build_fibration(projective_space(1), projective_space(1), std::move(twist), 0, 0,
                           "F" + std::to_string(a));
}

OrderedCollection hirzebruch_collection(const FibrationBundle& f) {
    // rays: (1,0), (-1,0), (0,1), (a,-1); free rays 1 and 3
    std::vector<Vec> classes = {
        {0, 0, 0, 0},  // O
        {0, 0, 0, 1},  // O(f)
        {0, 1, 0, 0},  // O(s)
        {0, 1, 0, 1},  // O(s+f)
    };
    return make_collection(f.total, std::move(classes));
}

FibrationBundle p1_bundle_over_p2(int twist_entry) {
    Mat twist(1, 1);
    twist(0, 0) = twist_entry;
    return build_fibration(projective_space(1), projective_space(2), std::move(twist), 0, 0,
                           "P1overP2_" + std::to_string(twist_entry));
}

OrderedCollection p1_bundle_over_p2_collection(const FibrationBundle& b) {
    // the twist-scale-1 interleaving of (O, O(1)) with the base collection
    std::vector<Vec> classes;
    for (int k = 1; k <= 2; ++k) {
        Vec fiber_cls(b.fiber->ray_count());
        fiber_cls.back() = k - 1;
        const Divisor lift = lift_from_fiber(b, {b.fiber, fiber_cls});
        for (int j = 0; j <= 2; ++j) {
            Vec base_cls(b.base->ray_count());
            base_cls.back() = j + k;
            classes.push_back((pullback_from_base(b, {b.base, base_cls}) + lift).coeffs);
        }
    }
    return make_collection(b.total, std::move(classes));
}

std::vector<std::string> names() { return {"pn", "product", "hirzebruch", "p1-over-p2"}; }

std::optional<Entry> make(const std::string& name, const std::vector<int>& params) {
    Entry e;
    if (name == "pn" && params.size() == 1) {
        e.fan = projective_space(params[0]);
        e.reference = beilinson_collection(*e.fan);
        return e;
    }
    if (name == "product" && params.size() == 2) {
        FanPtr a = projective_space(params[0]);
        FanPtr b = projective_space(params[1]);
        e.bundle = product(a, b);
        e.reference =
            box_collection(*e.bundle, beilinson_collection(a), beilinson_collection(b));
        return e;
    }
    if (name == "hirzebruch" && params.size() == 1) {
        e.bundle = hirzebruch(params[0]);
        e.reference = hirzebruch_collection(*e.bundle);
        return e;
    }
    if (name == "p1-over-p2" && params.size() == 1) {
        e.bundle = p1_bundle_over_p2(params[0]);
        if (params[0] == 1) e.reference = p1_bundle_over_p2_collection(*e.bundle);
        return e;
    }
    return std::nullopt;
}

}  // namespace toric::catalog
