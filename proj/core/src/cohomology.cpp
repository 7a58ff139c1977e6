#include "toric/cohomology.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "toric/parallel.hpp"

namespace toric {

namespace {

std::mutex g_table_mutex;
std::map<const Fan*, std::weak_ptr<const PatternTable>> g_tables;

}  // namespace

PatternTable::PatternTable(FanPtr fan) : fan_(std::move(fan)) {
    if (fan_->ray_count() > 22)
        throw Error("sign-pattern enumeration is limited to 22 rays");
    const std::size_t count = 1ull << fan_->ray_count();
    std::vector<HomologyProfile> all(count);
    parallel_for(count, [&](std::size_t mask) {
        all[mask] = reduced_homology(support_complex(*fan_, static_cast<std::uint32_t>(mask)));
    });
    for (std::size_t mask = 0; mask < count; ++mask)
        if (!all[mask].zero())
            nonzero_.push_back({static_cast<std::uint32_t>(mask), std::move(all[mask])});
}

std::shared_ptr<const PatternTable> PatternTable::for_fan(const FanPtr& fan) {
    {
        std::lock_guard<std::mutex> lock(g_table_mutex);
        auto it = g_tables.find(fan.get());
        if (it != g_tables.end())
            if (auto t = it->second.lock()) return t;
    }
    // Computed outside the lock; racing threads produce identical tables
    // and the last writer wins.
    std::shared_ptr<const PatternTable> t(new PatternTable(fan));
    std::lock_guard<std::mutex> lock(g_table_mutex);
    g_tables[fan.get()] = t;
    return t;
}

HomologyProfile PatternTable::profile(std::uint32_t pattern) const {
    const auto it = std::lower_bound(nonzero_.begin(), nonzero_.end(), pattern,
                                     [](const Entry& e, std::uint32_t p) { return e.pattern < p; });
    if (it != nonzero_.end() && it->pattern == pattern) return it->homology;
    return HomologyProfile{{0}};
}

Int CohomologyTable::euler() const {
    Int e = 0;
    for (std::size_t p = 0; p < h.size(); ++p) e += (p % 2 == 0) ? h[p] : -h[p];
    return e;
}

CohomologyTable cohomology(const Divisor& l) {
    const Fan& fan = *l.fan;
    const std::size_t s = fan.ray_count();
    const int n = fan.rank();
    if (l.coeffs.size() != s) throw PreconditionError("cohomology: wrong coefficient count");

    const auto table = PatternTable::for_fan(l.fan);
    const auto& entries = table->nonzero();

    // The character region of a pattern: <m, v_i> >= -r_i on the pattern's
    // rays, <m, v_i> <= -r_i - 1 off it. Each lattice point is one
    // representation of l with that sign pattern.
    std::vector<Int> counts(entries.size());
    parallel_for(entries.size(), [&](std::size_t e) {
        Polyhedron region(static_cast<std::size_t>(n));
        for (std::size_t i = 0; i < s; ++i) {
            if (entries[e].pattern & (1u << i))
                region.add_ge(fan.ray(i), -l.coeffs[i]);
            else
                region.add_lt(fan.ray(i), -l.coeffs[i]);
        }
        const auto pts = lattice_points(region);
        if (!pts)
            throw CohomologyError(
                "non-finite cohomology: fan not complete or invariant violated");
        counts[e] = static_cast<long>(pts->size());
    });

    CohomologyTable out;
    out.h.assign(static_cast<std::size_t>(n) + 1, Int(0));
    for (std::size_t e = 0; e < entries.size(); ++e) {
        if (counts[e] == 0) continue;
        for (int p = 0; p <= n; ++p)
            out.h[static_cast<std::size_t>(p)] +=
                counts[e] * entries[e].homology.dim(n - 1 - p);
        out.ledger.push_back({entries[e].pattern, counts[e], entries[e].homology});
    }
    return out;
}

bool is_acyclic(const Divisor& l) {
    const CohomologyTable t = cohomology(l);
    for (std::size_t i = 1; i < t.h.size(); ++i)
        if (t.h[i] != 0) return false;
    return true;
}

Int euler_pairing(const Divisor& a, const Divisor& b) {
    return cohomology(b - a).euler();
}

DecomposedRepresentation decompose_representation(const FibrationBundle& b,
                                                  const Divisor& bundle_on_total, const Vec& r) {
    if (bundle_on_total.fan != b.total)
        throw PreconditionError("decompose_representation: bundle is not on the total space");
    if (r.size() != b.total->ray_count())
        throw PreconditionError("decompose_representation: wrong coefficient count");
    if (canonical_representation(b.total_pic, r) !=
        canonical_representation(b.total_pic, bundle_on_total.coeffs))
        throw PreconditionError(
            "decompose_representation: r is not a representation of the given bundle");

    DecomposedRepresentation d;
    d.fiber_part.resize(b.fiber->ray_count());
    for (std::size_t i = 0; i < d.fiber_part.size(); ++i)
        d.fiber_part[i] = r[static_cast<std::size_t>(b.fiber_to_total[i])];
    d.base_part.resize(b.base->ray_count());
    for (std::size_t j = 0; j < d.base_part.size(); ++j)
        d.base_part[j] = r[static_cast<std::size_t>(b.base_to_total[j])];

    Vec corr(b.base->ray_count());
    for (std::size_t jc = 0; jc < b.base_pic.free_rays.size(); ++jc) {
        Int c = 0;
        for (std::size_t k = 0; k < b.twist.rows(); ++k)
            c += d.fiber_part[static_cast<std::size_t>(b.fiber_pic.basis_rays[k])] * b.twist(k, jc);
        corr[static_cast<std::size_t>(b.base_pic.free_rays[jc])] = c;
    }
    d.twist_correction = {b.base, std::move(corr)};
    return d;
}

bool kunneth_check(const FibrationBundle& b, const Vec& r) {
    if (r.size() != b.total->ray_count())
        throw PreconditionError("kunneth_check: wrong coefficient count");

    std::uint32_t total_mask = 0, fiber_mask = 0, base_mask = 0;
    for (std::size_t i = 0; i < r.size(); ++i)
        if (r[i] >= 0) total_mask |= 1u << i;
    for (std::size_t i = 0; i < b.fiber->ray_count(); ++i)
        if (r[static_cast<std::size_t>(b.fiber_to_total[i])] >= 0) fiber_mask |= 1u << i;
    for (std::size_t j = 0; j < b.base->ray_count(); ++j)
        if (r[static_cast<std::size_t>(b.base_to_total[j])] >= 0) base_mask |= 1u << j;

    const HomologyProfile total =
        PatternTable::for_fan(b.total)->profile(total_mask);
    const HomologyProfile fib = PatternTable::for_fan(b.fiber)->profile(fiber_mask);
    const HomologyProfile bas = PatternTable::for_fan(b.base)->profile(base_mask);

    // join convolution: H~_i(total) = sum over p+q = i-1 of H~_p x H~_q
    const int top = b.total->rank() - 1;
    for (int i = -1; i <= top; ++i) {
        std::int64_t conv = 0;
        for (int p = -1; p <= i; ++p) conv += fib.dim(p) * bas.dim(i - 1 - p);
        if (conv != total.dim(i)) return false;
    }
    return true;
}

bool acyclic_pullback_check(const FibrationBundle& b, const Divisor& fiber_bundle,
                            const Divisor& base_bundle) {
    if (fiber_bundle.fan != b.fiber)
        throw PreconditionError("acyclic_pullback_check: first bundle is not on the fiber");
    if (base_bundle.fan != b.base)
        throw PreconditionError("acyclic_pullback_check: second bundle is not on the base");
    const CohomologyTable t = cohomology(fiber_bundle);
    if (t.h[0] != 0)
        throw PreconditionError("acyclic_pullback_check: fiber bundle is effective");
    for (std::size_t i = 1; i < t.h.size(); ++i)
        if (t.h[i] != 0)
            throw PreconditionError("acyclic_pullback_check: fiber bundle is not acyclic");
    return is_acyclic(lift_from_fiber(b, fiber_bundle) + pullback_from_base(b, base_bundle));
}

}  // namespace toric
