#include <benchmark/benchmark.h>

#include "mint/rng.hpp"
#include "mint/selection.hpp"
#include "support.hpp"

namespace {

void BM_SelectGreedy(benchmark::State& state) {
    mint::Xoshiro256pp rng(3);
    const auto m = static_cast<std::size_t>(state.range(0));
    const auto n = static_cast<std::size_t>(state.range(1));
    const auto view = support::random_view(rng, m, 180, 20);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mint::select_greedy(view, n, mint::SelectionMode::Mint));
    }
}

void BM_SelectGreedyNaive(benchmark::State& state) {
    mint::Xoshiro256pp rng(3);
    const auto m = static_cast<std::size_t>(state.range(0));
    const auto n = static_cast<std::size_t>(state.range(1));
    const auto view = support::random_view(rng, m, 180, 20);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mint::select_greedy_naive(view, n, mint::SelectionMode::Mint));
    }
}

}  // namespace

BENCHMARK(BM_SelectGreedy)->Args({500, 50})->Args({2000, 200})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SelectGreedyNaive)->Args({500, 50})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
