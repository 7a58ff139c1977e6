#include <benchmark/benchmark.h>

#include <random>

#include "toric/catalog.hpp"
#include "toric/cohomology.hpp"
#include "toric/collections.hpp"

using namespace toric;

namespace {

Divisor random_divisor(const FanPtr& fan, std::mt19937& rng) {
    std::uniform_int_distribution<int> entry(-5, 5);
    Vec c(fan->ray_count());
    for (Int& x : c) x = entry(rng);
    return {fan, std::move(c)};
}

}  // namespace

static void BM_LatticePointsSimplex(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Polyhedron p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        Vec e(static_cast<std::size_t>(n));
        e[static_cast<std::size_t>(i)] = 1;
        p.add_ge(e, 0);
    }
    p.add_le(Vec(static_cast<std::size_t>(n), Int(1)), 8);
    for (auto _ : state) {
        auto pts = lattice_points(p);
        benchmark::DoNotOptimize(pts);
    }
}
BENCHMARK(BM_LatticePointsSimplex)->Arg(2)->Arg(3)->Arg(4);

static void BM_ReducedHomologyFullSupport(benchmark::State& state) {
    const auto prod = catalog::product(catalog::projective_space(2),
                                       catalog::projective_space(2));
    const SupportComplex c = support_complex(*prod.total, prod.total->full_mask());
    for (auto _ : state) {
        auto h = reduced_homology(c);
        benchmark::DoNotOptimize(h);
    }
}
BENCHMARK(BM_ReducedHomologyFullSupport);

static void BM_PatternTable(benchmark::State& state) {
    for (auto _ : state) {
        state.PauseTiming();
        // a fresh fan defeats the per-fan cache so the table is rebuilt
        const auto b = catalog::p1_bundle_over_p2(1);
        state.ResumeTiming();
        auto table = PatternTable::for_fan(b.total);
        benchmark::DoNotOptimize(table);
    }
}
BENCHMARK(BM_PatternTable);

static void BM_CohomologyP3(benchmark::State& state) {
    const FanPtr p3 = catalog::projective_space(3);
    std::mt19937 rng(17);
    for (auto _ : state) {
        auto t = cohomology(random_divisor(p3, rng));
        benchmark::DoNotOptimize(t);
    }
}
BENCHMARK(BM_CohomologyP3);

static void BM_CheckBeilinsonP3(benchmark::State& state) {
    const FanPtr p3 = catalog::projective_space(3);
    const OrderedCollection coll = catalog::beilinson_collection(p3);
    for (auto _ : state) {
        auto rep = check_collection(coll);
        benchmark::DoNotOptimize(rep);
    }
}
BENCHMARK(BM_CheckBeilinsonP3);

static void BM_SynthesizeHirzebruch(benchmark::State& state) {
    const auto f = catalog::hirzebruch(static_cast<int>(state.range(0)));
    const auto fiber_coll = catalog::beilinson_collection(f.fiber);
    const auto base_coll = catalog::beilinson_collection(f.base);
    Vec step(f.base->ray_count());
    step[static_cast<std::size_t>(f.base_pic.free_rays[0])] = 1;
    for (auto _ : state) {
        auto res = synthesize_fibration_collection(f, fiber_coll, base_coll,
                                                   {f.base, step}, 8);
        benchmark::DoNotOptimize(res);
    }
}
BENCHMARK(BM_SynthesizeHirzebruch)->Arg(1)->Arg(3);

BENCHMARK_MAIN();
