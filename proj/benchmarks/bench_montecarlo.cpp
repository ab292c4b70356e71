#include <benchmark/benchmark.h>

#include <truncvar/models.hpp>
#include <truncvar/montecarlo.hpp>

using namespace truncvar;

static void BM_EstimateGaussian(benchmark::State& state) {
    const SamplerSpec spec{GaussianPair{0, 0, 1, 1, 0.5}, 1, static_cast<std::uint64_t>(state.range(0))};
    for (auto _ : state) benchmark::DoNotOptimize(estimate_gap(spec));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EstimateGaussian)->Arg(1 << 16)->Arg(1 << 20)->Unit(benchmark::kMillisecond);

static void BM_Philox(benchmark::State& state) {
    PhiloxStream stream(7, StreamDomain::MonteCarlo, 0);
    for (auto _ : state) benchmark::DoNotOptimize(stream.next_uniform());
}
BENCHMARK(BM_Philox);

static void BM_QueueMM1(benchmark::State& state) {
    const QueueConfig cfg{ExponentialMarginal{0.5}, ExponentialMarginal{1.0},
                          static_cast<std::uint64_t>(state.range(0)), 3};
    for (auto _ : state) benchmark::DoNotOptimize(simulate_queue(cfg));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_QueueMM1)->Arg(100000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
