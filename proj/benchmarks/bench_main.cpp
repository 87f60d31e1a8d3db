#include <benchmark/benchmark.h>

#include "brt/chain.hpp"
#include "brt/hives.hpp"
#include "brt/spectrum.hpp"
#include "brt/tableaux.hpp"

using namespace brt;

static void BM_CountLR(benchmark::State& state)
{
    int k = static_cast<int>(state.range(0));
    Partition la{4 * k, 3 * k, 2 * k}, mu{3 * k, 2 * k, k}, nu{2 * k, k};
    for (auto _ : state)
        benchmark::DoNotOptimize(count_lr(la, mu, nu));
}
BENCHMARK(BM_CountLR)->DenseRange(1, 4);

static void BM_CountHives(benchmark::State& state)
{
    int k = static_cast<int>(state.range(0));
    Partition la{4 * k, 3 * k, 2 * k}, mu{3 * k, 2 * k, k}, nu{2 * k, k};
    for (auto _ : state)
        benchmark::DoNotOptimize(count_hives(la, mu, nu));
}
BENCHMARK(BM_CountHives)->DenseRange(1, 4);

static void BM_FullSpectrum(benchmark::State& state)
{
    ShuffleParams p = ShuffleParams::balanced(static_cast<int>(state.range(0)), Rational(1, 2));
    for (auto _ : state)
        benchmark::DoNotOptimize(full_spectrum(p, 1));
}
BENCHMARK(BM_FullSpectrum)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_Evolve(benchmark::State& state)
{
    int n = static_cast<int>(state.range(0));
    ShuffleParams p = ShuffleParams::balanced(n, Rational(1, 2));
    StepMeasure m = step_measure(p);
    GroupDistribution d = GroupDistribution::point_mass(2 * n, identity_perm(2 * n));
    for (auto _ : state)
        benchmark::DoNotOptimize(evolve(d, m, 1));
}
BENCHMARK(BM_Evolve)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_ExactWalkStep(benchmark::State& state)
{
    ShuffleParams p = ShuffleParams::balanced(3, Rational(1, 2));
    ExactWalk walk(step_measure(p));
    for (auto _ : state)
        walk.step();
}
BENCHMARK(BM_ExactWalkStep)->Iterations(50);

static void BM_SampleWalk(benchmark::State& state)
{
    ShuffleParams p = ShuffleParams::balanced(200, Rational(1, 2));
    std::uint64_t seed = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(sample_walk(p, state.range(0), ++seed));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SampleWalk)->Arg(2397);

static void BM_FixedPointHistogram(benchmark::State& state)
{
    ShuffleParams p = ShuffleParams::balanced(50, Rational(1, 2));
    for (auto _ : state)
        benchmark::DoNotOptimize(fixed_point_histogram(p, 300, 4096, 1, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_FixedPointHistogram)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
