#include <benchmark/benchmark.h>

#include "mastermind/rng.hpp"
#include "mastermind/sat.hpp"
#include "mastermind/solver.hpp"

using namespace mastermind;

static void BM_BlackCount(benchmark::State &state)
{
    const int n = static_cast<int>(state.range(0));
    SplitMix64 rng(1);
    CodeVector a = random_secret(n, 8, rng);
    CodeVector b = random_secret(n, 8, rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(black_count(a, b));
}
BENCHMARK(BM_BlackCount)->Arg(64)->Arg(1024);

static void BM_Solve(benchmark::State &state)
{
    const int n = static_cast<int>(state.range(0));
    const int k = static_cast<int>(state.range(1));
    SplitMix64 rng(2);
    CodeVector secret = random_secret(n, k, rng);
    for (auto _ : state) {
        HonestOracle oracle(secret, k);
        benchmark::DoNotOptimize(solve(oracle));
    }
}
BENCHMARK(BM_Solve)->Args({64, 16})->Args({256, 32})->Args({1024, 8});

static void BM_NaiveSolve(benchmark::State &state)
{
    const int n = static_cast<int>(state.range(0));
    const int k = static_cast<int>(state.range(1));
    SplitMix64 rng(3);
    CodeVector secret = random_secret(n, k, rng);
    for (auto _ : state) {
        HonestOracle oracle(secret, k);
        benchmark::DoNotOptimize(naive_solve(oracle));
    }
}
BENCHMARK(BM_NaiveSolve)->Args({64, 16});

static void BM_SatBacktracking(benchmark::State &state)
{
    // A transcript instance: unique witness, moderately constrained.
    SplitMix64 rng(4);
    const int n = 12, k = 4;
    CodeVector secret = random_secret(n, k, rng);
    HonestOracle oracle(secret, k);
    SolveTranscript t = solve(oracle);
    SatInstance inst;
    inst.length = n;
    inst.num_colors = k;
    for (const auto &[query, score] : t.queries)
        inst.constraints.push_back({query, score});
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_backtracking(inst));
}
BENCHMARK(BM_SatBacktracking);

BENCHMARK_MAIN();
