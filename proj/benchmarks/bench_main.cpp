#include "sodlab/sodlab.hpp"

#include <benchmark/benchmark.h>

using namespace sodlab;

static void BM_StraightenRank4(benchmark::State& state)
{
    std::vector<IntegerWeight> weights;
    for (int a = -4; a <= 4; ++a)
        for (int b = -4; b <= 4; ++b)
            weights.push_back(IntegerWeight{a, b, -a, 2 * b});
    for (auto _ : state)
        for (const IntegerWeight& w : weights)
            benchmark::DoNotOptimize(straighten(w));
}
BENCHMARK(BM_StraightenRank4);

static void BM_AlternantOracle(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    std::vector<int> entries(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        entries[static_cast<std::size_t>(k)] = (k * 3) % 5 - 2;
    const IntegerWeight w(entries);
    for (auto _ : state)
        benchmark::DoNotOptimize(alternant_oracle(w));
}
BENCHMARK(BM_AlternantOracle)->DenseRange(2, 5);

static void BM_LittlewoodRichardson(benchmark::State& state)
{
    const Partition lam{3, 2, 1}, mu{2, 2, 1};
    for (auto _ : state)
        benchmark::DoNotOptimize(littlewood_richardson(lam, mu, 6));
}
BENCHMARK(BM_LittlewoodRichardson);

static void BM_SchurDecompose(benchmark::State& state)
{
    const LaurentCharacter p = schur_polynomial(Partition{3, 1}, 4) * schur_polynomial(Partition{2, 1}, 4);
    for (auto _ : state)
        benchmark::DoNotOptimize(schur_decompose(p));
}
BENCHMARK(BM_SchurDecompose);

static void BM_GenerationTrace(benchmark::State& state)
{
    const LocalSetup s{5, 2, 3};
    for (auto _ : state)
        benchmark::DoNotOptimize(generation_trace(s));
}
BENCHMARK(BM_GenerationTrace);

static void BM_FlipImage(benchmark::State& state)
{
    const LocalSetup s{5, 3, 4};
    for (auto _ : state)
        for (const Partition& lam : box_enumerate(Box{1, 2}))
            benchmark::DoNotOptimize(flip_image(s, lam));
}
BENCHMARK(BM_FlipImage);

static void BM_Semiorthogonality(benchmark::State& state)
{
    const int cutoff = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(semiorthogonality_check(LocalSetup{2, 1, 1}, cutoff));
}
BENCHMARK(BM_Semiorthogonality)->Arg(4)->Arg(6)->Arg(8);

BENCHMARK_MAIN();
