#include <benchmark/benchmark.h>

#include <cmath>

#include "jcm/jcm.hpp"

namespace {

jcm::ModelParams paper_params() {
    jcm::ModelParams p;
    p.alpha = jcm::complex{std::sqrt(50.0), 0.0};
    return p;
}

void BM_CoherentState(benchmark::State& state) {
    const int cutoff = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(jcm::coherent_state(std::sqrt(50.0), cutoff));
}
BENCHMARK(BM_CoherentState)->Arg(128)->Arg(256)->Arg(1024);

void BM_EvolveAndEntropy(benchmark::State& state) {
    auto p = paper_params();
    p.mode = state.range(0) ? jcm::RabiMode::Exact : jcm::RabiMode::Quadratic;
    const auto tau = jcm::Radians::pi_times(201, 800);
    for (auto _ : state) benchmark::DoNotOptimize(jcm::entropy(jcm::atom_density(jcm::evolve(p, tau))));
}
BENCHMARK(BM_EvolveAndEntropy)->Arg(0)->Arg(1);

void BM_QGrid(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto field = jcm::field_rank2(jcm::evolve(paper_params(), jcm::Radians::pi_times(1, 8)));
    for (auto _ : state) benchmark::DoNotOptimize(jcm::q_grid(field, jcm::PhaseWindow{}, n, n));
    state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_QGrid)->Arg(61)->Arg(121)->Arg(241)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_CountComponents(benchmark::State& state) {
    const auto field = jcm::field_rank2(jcm::evolve(paper_params(), jcm::Radians::pi_times(1, 8)));
    const auto grid = jcm::q_grid(field, jcm::PhaseWindow{}, 241, 241);
    for (auto _ : state) benchmark::DoNotOptimize(jcm::count_components(grid));
}
BENCHMARK(BM_CountComponents);

void BM_DipScan(benchmark::State& state) {
    const auto p = paper_params();
    const auto d1 = jcm::dip_offset(1, 50.0).delta;
    for (auto _ : state) {
        benchmark::DoNotOptimize(jcm::entropy_dip_scan(p, jcm::Radians::pi_times(1, 4), d1.times(6), 1201));
    }
}
BENCHMARK(BM_DipScan)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_CollapseBands(benchmark::State& state) {
    const auto p = paper_params();
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            jcm::collapse_bands(p, jcm::Radians(), jcm::Radians::pi_times(1, 2), 20001, 0.1, 1.1e-3));
    }
}
BENCHMARK(BM_CollapseBands)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
