#include "toric/fibration.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace toric {

namespace {

Vec concat(const Vec& a, const Vec& b) {
    Vec r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

Vec zeros(std::size_t n) { return Vec(n); }

}  // namespace

FibrationBundle build_fibration(FanPtr fiber, FanPtr base, Mat twist, int fiber_basis_cone,
                                int base_basis_cone, std::string name) {
    const std::size_t d = static_cast<std::size_t>(fiber->rank());
    const std::size_t m = static_cast<std::size_t>(base->rank());

    FibrationBundle b;
    b.fiber = fiber;
    b.base = base;
    b.fiber_pic = pic_basis(fiber, fiber_basis_cone);
    b.base_pic = pic_basis(base, base_basis_cone);

    if (twist.rows() != d || twist.cols() != b.base_pic.free_rays.size())
        throw PreconditionError("build_fibration: twist must be fiber-rank x (#base rays - base rank)");
    b.twist = std::move(twist);

    FanData total;
    total.rank = static_cast<int>(d + m);
    total.name = name.empty() ? fiber->name() + "_over_" + base->name() : std::move(name);

    for (const Vec& v : fiber->rays()) total.rays.push_back(concat(v, zeros(m)));
    std::vector<int> free_col(base->ray_count(), -1);
    for (std::size_t j = 0; j < b.base_pic.free_rays.size(); ++j)
        free_col[static_cast<std::size_t>(b.base_pic.free_rays[j])] = static_cast<int>(j);
    for (std::size_t j = 0; j < base->ray_count(); ++j) {
        Vec head = zeros(d);
        if (free_col[j] >= 0)
            for (std::size_t k = 0; k < d; ++k)
                head = head + b.twist(k, static_cast<std::size_t>(free_col[j])) *
                                  fiber->ray(static_cast<std::size_t>(b.fiber_pic.basis_rays[k]));
        total.rays.push_back(concat(head, base->ray(j)));
    }

    const std::size_t r = fiber->ray_count();
    for (const auto& nu : fiber->max_cones())
        for (const auto& tau : base->max_cones()) {
            std::vector<int> cone = nu;
            for (int t : tau) cone.push_back(static_cast<int>(r) + t);
            total.max_cones.push_back(std::move(cone));
        }

    try {
        b.total = Fan::make(std::move(total));
    } catch (const FanError& e) {
        throw ConstructionError("build_fibration: assembled total fan is invalid (cone index c "
                                "decomposes as (c / #base cones, c mod #base cones)): " +
                                std::string(e.what()));
    }

    const int total_base_cone = fiber_basis_cone * static_cast<int>(base->max_cones().size()) +
                                base_basis_cone;
    b.total_pic = pic_basis(b.total, total_base_cone);

    b.fiber_to_total.resize(r);
    for (std::size_t i = 0; i < r; ++i) b.fiber_to_total[i] = static_cast<int>(i);
    b.base_to_total.resize(base->ray_count());
    for (std::size_t j = 0; j < base->ray_count(); ++j)
        b.base_to_total[j] = static_cast<int>(r + j);
    return b;
}

FibrationVerification verify_fibration(FanPtr total, std::vector<int> fiber_rays) {
    auto fail = [](std::string why) {
        return FibrationVerification{std::nullopt, std::move(why)};
    };
    const std::size_t n = static_cast<std::size_t>(total->rank());
    const std::size_t s = total->ray_count();

    std::sort(fiber_rays.begin(), fiber_rays.end());
    if (fiber_rays.empty()) return fail("no fiber rays given");
    if (std::adjacent_find(fiber_rays.begin(), fiber_rays.end()) != fiber_rays.end())
        return fail("fiber ray indices repeat");
    if (fiber_rays.front() < 0 || static_cast<std::size_t>(fiber_rays.back()) >= s)
        return fail("fiber ray index out of range");
    if (fiber_rays.size() == s) return fail("fiber rays exhaust the fan");

    std::vector<Vec> span_rows;
    for (int i : fiber_rays) span_rows.push_back(total->ray(static_cast<std::size_t>(i)));
    const std::size_t d = rank_of_rows(span_rows);
    if (d == n) return fail("fiber rays span the whole lattice");
    const std::size_t m = n - d;

    std::vector<bool> in_fiber(s, false);
    for (int i : fiber_rays) in_fiber[static_cast<std::size_t>(i)] = true;
    for (std::size_t i = 0; i < s; ++i) {
        if (in_fiber[i]) continue;
        span_rows.push_back(total->ray(i));
        const bool inside = rank_of_rows(span_rows) == d;
        span_rows.pop_back();
        if (inside)
            return fail("ray " + std::to_string(i) +
                        " lies in the fiber subspace but is not in the given subset");
    }

    // every maximal cone must split as (d rays inside H) + (m rays outside)
    for (std::size_t c = 0; c < total->max_cones().size(); ++c) {
        std::size_t inside = 0;
        for (int i : total->max_cones()[c])
            if (in_fiber[static_cast<std::size_t>(i)]) ++inside;
        if (inside != d)
            return fail("maximal cone " + std::to_string(c) + " has " + std::to_string(inside) +
                        " fiber rays, expected " + std::to_string(d));
    }

    // adapted coordinates from the first maximal cone: its fiber part maps
    // to the first d coordinates, the rest to the last m
    std::vector<int> nu0, tau0;
    for (int i : total->max_cones()[0])
        (in_fiber[static_cast<std::size_t>(i)] ? nu0 : tau0).push_back(i);
    std::vector<Vec> cols;
    for (int i : nu0) cols.push_back(total->ray(static_cast<std::size_t>(i)));
    for (int i : tau0) cols.push_back(total->ray(static_cast<std::size_t>(i)));
    const Mat adapt = inverse_unimodular(Mat::from_cols(cols));
    auto fiber_coords = [&](const Vec& x) {
        const Vec y = adapt.apply(x);
        return Vec(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(d));
    };
    auto project = [&](const Vec& x) {
        const Vec y = adapt.apply(x);
        return Vec(y.begin() + static_cast<std::ptrdiff_t>(d), y.end());
    };

    // fiber fan in the d-dimensional sublattice
    std::vector<int> fiber_local(s, -1);
    FanData fiber_data;
    fiber_data.rank = static_cast<int>(d);
    fiber_data.name = total->name() + ".fiber";
    for (std::size_t k = 0; k < fiber_rays.size(); ++k) {
        fiber_local[static_cast<std::size_t>(fiber_rays[k])] = static_cast<int>(k);
        fiber_data.rays.push_back(fiber_coords(total->ray(static_cast<std::size_t>(fiber_rays[k]))));
    }
    std::vector<std::vector<int>> fiber_cone_of_total;
    std::set<std::vector<int>> fiber_seen;
    for (const auto& cone : total->max_cones()) {
        std::vector<int> nu;
        for (int i : cone)
            if (in_fiber[static_cast<std::size_t>(i)]) nu.push_back(fiber_local[static_cast<std::size_t>(i)]);
        std::sort(nu.begin(), nu.end());
        fiber_cone_of_total.push_back(nu);
        if (fiber_seen.insert(nu).second) fiber_data.max_cones.push_back(nu);
    }
    FanPtr fiber;
    try {
        fiber = Fan::make(fiber_data);
    } catch (const FanError& e) {
        return fail("cones inside the fiber subspace do not form a smooth complete fan: " +
                    std::string(e.what()));
    }

    // base fan from the projection
    std::vector<int> base_local(s, -1);
    std::vector<int> base_to_total;
    FanData base_data;
    base_data.rank = static_cast<int>(m);
    base_data.name = total->name() + ".base";
    for (std::size_t i = 0; i < s; ++i) {
        if (in_fiber[i]) continue;
        Vec e = project(total->ray(i));
        if (is_zero(e)) return fail("ray " + std::to_string(i) + " projects to zero");
        if (content(e) != 1)
            return fail("ray " + std::to_string(i) + " projects to a non-primitive vector");
        for (std::size_t j = 0; j < base_data.rays.size(); ++j)
            if (base_data.rays[j] == e)
                return fail("rays " + std::to_string(base_to_total[j]) + " and " +
                            std::to_string(i) + " project to the same base ray");
        base_local[i] = static_cast<int>(base_data.rays.size());
        base_data.rays.push_back(std::move(e));
        base_to_total.push_back(static_cast<int>(i));
    }
    std::vector<std::vector<int>> base_cone_of_total;
    std::set<std::vector<int>> base_seen;
    for (const auto& cone : total->max_cones()) {
        std::vector<int> tau;
        for (int i : cone)
            if (!in_fiber[static_cast<std::size_t>(i)]) tau.push_back(base_local[static_cast<std::size_t>(i)]);
        std::sort(tau.begin(), tau.end());
        base_cone_of_total.push_back(tau);
        if (base_seen.insert(tau).second) base_data.max_cones.push_back(tau);
    }
    FanPtr base;
    try {
        base = Fan::make(base_data);
    } catch (const FanError& e) {
        return fail("projected cones do not form a smooth complete fan: " + std::string(e.what()));
    }

    // local triviality: the maximal cones are exactly the fiber x base pairs
    if (total->max_cones().size() != fiber->max_cones().size() * base->max_cones().size())
        return fail("maximal cone count is not the product of fiber and base counts");
    std::set<std::pair<std::vector<int>, std::vector<int>>> pairs;
    for (std::size_t c = 0; c < total->max_cones().size(); ++c)
        if (!pairs.insert({fiber_cone_of_total[c], base_cone_of_total[c]}).second)
            return fail("two maximal cones share the same fiber/base pair");

    FibrationBundle b;
    b.fiber = fiber;
    b.base = base;
    b.total = total;
    b.fiber_pic = pic_basis(fiber, 0);
    b.base_pic = pic_basis(base, 0);
    b.fiber_to_total.assign(fiber_rays.begin(), fiber_rays.end());
    b.base_to_total = std::move(base_to_total);

    // the adapted cone is the lift of (fiber cone 0, base cone 0)
    b.total_pic = pic_basis(total, 0);

    // twist recovery: subtract the section through the base basis lifts,
    // then read the fiber component in the fiber basis cone's rays
    const Mat& base_dual = base->cone_dual(0);
    const Mat& fiber_dual = fiber->cone_dual(0);
    b.twist = Mat(d, b.base_pic.free_rays.size());
    for (std::size_t jc = 0; jc < b.base_pic.free_rays.size(); ++jc) {
        const int j = b.base_pic.free_rays[jc];
        const Vec& u = total->ray(static_cast<std::size_t>(b.base_to_total[static_cast<std::size_t>(j)]));
        const Vec c = base_dual.apply(base->ray(static_cast<std::size_t>(j)));
        Vec w = u;
        for (std::size_t k = 0; k < m; ++k) {
            const int bk = b.base_pic.basis_rays[k];
            const Vec& lift = total->ray(static_cast<std::size_t>(b.base_to_total[static_cast<std::size_t>(bk)]));
            w = w - c[k] * lift;
        }
        if (!is_zero(project(w)))
            return fail("base ray " + std::to_string(j) + " does not lift through the section");
        const Vec gamma = fiber_dual.apply(fiber_coords(w));
        for (std::size_t k = 0; k < d; ++k) b.twist(k, jc) = gamma[k];
    }
    return FibrationVerification{std::move(b), ""};
}

Divisor pullback_from_base(const FibrationBundle& b, const Divisor& h) {
    if (h.fan != b.base) throw PreconditionError("pullback_from_base: divisor is not on the base");
    Vec out(b.total->ray_count());
    for (std::size_t j = 0; j < b.base->ray_count(); ++j)
        out[static_cast<std::size_t>(b.base_to_total[j])] = h.coeffs[j];
    return {b.total, std::move(out)};
}

Divisor restrict_to_fiber(const FibrationBundle& b, const Divisor& l) {
    if (l.fan != b.total) throw PreconditionError("restrict_to_fiber: divisor is not on the total space");
    const Vec canon = canonical_representation(b.total_pic, l.coeffs);
    Vec out(b.fiber->ray_count());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = canon[static_cast<std::size_t>(b.fiber_to_total[i])];
    return {b.fiber, std::move(out)};
}

Divisor lift_from_fiber(const FibrationBundle& b, const Divisor& l) {
    if (l.fan != b.fiber) throw PreconditionError("lift_from_fiber: divisor is not on the fiber");
    const Vec canon = canonical_representation(b.fiber_pic, l.coeffs);
    Vec out(b.total->ray_count());
    for (std::size_t i = 0; i < b.fiber->ray_count(); ++i)
        out[static_cast<std::size_t>(b.fiber_to_total[i])] = canon[i];
    return {b.total, std::move(out)};
}

bool rank_k0_check(const FibrationBundle& b) {
    if (euler_characteristic(*b.total) !=
        euler_characteristic(*b.fiber) * euler_characteristic(*b.base))
        return false;
    const std::vector<Int> pf = poincare_polynomial(*b.fiber);
    const std::vector<Int> pz = poincare_polynomial(*b.base);
    const std::vector<Int> px = poincare_polynomial(*b.total);
    std::vector<Int> prod(pf.size() + pz.size() - 1);
    for (std::size_t i = 0; i < pf.size(); ++i)
        for (std::size_t j = 0; j < pz.size(); ++j) prod[i + j] += pf[i] * pz[j];
    return prod == px;
}

}  // namespace toric
