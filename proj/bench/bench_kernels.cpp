// Serial reference kernels against their OpenMP versions on oracle workloads.

#include <benchmark/benchmark.h>

#include "schubert/kernels.hpp"
#include "schubert/verify.hpp"

using namespace schubert;

namespace {

Exec exec_of(const benchmark::State& state) {
    return state.range(0) == 0 ? Exec::Serial : Exec::Parallel;
}

// Collects Omega_(1,0,0)(L.) in G_3(GF(3)^6), about 33k subspaces.
void BM_CollectLocus(benchmark::State& state) {
    const PrimeField f(3);
    const GrassmannianEnumerator g(f, 3, 6);
    const FlagSpec L = flag_L(f, 6);
    const Partition lambda(Box(3, 3), {1, 0, 0});
    auto keep = [&](const Subspace& p) { return schubert_membership(p, lambda, L); };
    auto same = [](const Subspace& p) { return p; };
    for (auto _ : state) {
        auto keys = kernels::collect(exec_of(state), g, keep, same);
        benchmark::DoNotOptimize(keys.size());
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * g.size()));
}
BENCHMARK(BM_CollectLocus)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

// Exhaustive chart sweep of the visual result, 3^9 chart matrices.
void BM_VisualSweep(benchmark::State& state) {
    OracleOptions opts;
    opts.exec = exec_of(state);
    const Partition lambda(Box(3, 3), {2, 1, 0});
    for (auto _ : state) {
        auto r = check_visual_result(lambda, 3, opts);
        benchmark::DoNotOptimize(r.lhs);
    }
}
BENCHMARK(BM_VisualSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

// Preimage count of prop2 over GF(3), d=2, c=3, s=2.
void BM_Prop2(benchmark::State& state) {
    OracleOptions opts;
    opts.exec = exec_of(state);
    const Partition mu(Box(2, 5), {2, 1});
    for (auto _ : state) {
        auto r = check_prop2(mu, 2, 3, opts);
        benchmark::DoNotOptimize(r.lhs);
    }
}
BENCHMARK(BM_Prop2)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
