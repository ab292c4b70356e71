#include <benchmark/benchmark.h>

#include <random>

#include <truncvar/bounds.hpp>
#include <truncvar/verification.hpp>

using namespace truncvar;

namespace {

struct Instance {
    SampleSpace space;
    RandomVariable x, x1, x2;
};

Instance random_instance(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Rational> probs(n, Rational(1, static_cast<unsigned long>(n)));
    auto space = make_space(probs);
    auto draw = [&] {
        std::vector<Rational> v;
        for (std::size_t i = 0; i < n; ++i) {
            v.emplace_back(static_cast<long>(rng() % 61) - 30, static_cast<unsigned long>(1 + rng() % 8));
            v.back().canonicalize();
        }
        return RandomVariable(space, std::move(v));
    };
    auto x = draw(), x1 = draw(), x2 = draw();
    return {space, x, x1, x2};
}

}  // namespace

static void BM_CovarianceGap(benchmark::State& state) {
    const auto in = random_instance(static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(covariance_gap(in.x1, in.x2));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_CovarianceGap)->RangeMultiplier(4)->Range(4, 1024);

static void BM_ClampBound(benchmark::State& state) {
    const auto in = random_instance(static_cast<std::size_t>(state.range(0)), 2);
    for (auto _ : state) benchmark::DoNotOptimize(clamp_variance_bound(in.x, in.x1, in.x2));
}
BENCHMARK(BM_ClampBound)->RangeMultiplier(4)->Range(4, 1024);

static void BM_AuditPair(benchmark::State& state) {
    const auto in = random_instance(static_cast<std::size_t>(state.range(0)), 3);
    for (auto _ : state) benchmark::DoNotOptimize(audit_pair(in.x1, in.x2));
}
BENCHMARK(BM_AuditPair)->Arg(4)->Arg(64);

static void BM_ExhaustiveSweep(benchmark::State& state) {
    const std::vector<Rational> values{Rational(0), Rational(1), Rational(2)};
    for (auto _ : state) benchmark::DoNotOptimize(exhaustive_sweep(static_cast<std::size_t>(state.range(0)), values));
}
BENCHMARK(BM_ExhaustiveSweep)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
