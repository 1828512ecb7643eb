#include <benchmark/benchmark.h>

#include "mint/discretize.hpp"
#include "mint/infotheory.hpp"
#include "mint/rng.hpp"

namespace {

mint::DiscreteColumn random_column(mint::Xoshiro256pp& rng, std::size_t n, int alphabet) {
    std::vector<std::uint32_t> raw(n);
    for (auto& c : raw) c = static_cast<std::uint32_t>(rng.below(alphabet));
    return mint::DiscreteColumn::from_codes(raw);
}

void BM_MutualInformation(benchmark::State& state) {
    mint::Xoshiro256pp rng(1);
    const auto n = static_cast<std::size_t>(state.range(0));
    const int alphabet = static_cast<int>(state.range(1));
    const auto a = random_column(rng, n, alphabet);
    const auto b = random_column(rng, n, alphabet);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mint::mutual_information(a, b));
    }
}

void BM_EqualFrequencyDiscretize(benchmark::State& state) {
    mint::Xoshiro256pp rng(2);
    std::vector<double> values(static_cast<std::size_t>(state.range(0)));
    for (auto& v : values) v = rng.uniform01();
    const auto spec = mint::BinningSpec::equal_frequency(14);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mint::discretize(values, spec));
    }
}

}  // namespace

BENCHMARK(BM_MutualInformation)->Args({200, 3})->Args({200, 14})->Args({1000, 14});
BENCHMARK(BM_EqualFrequencyDiscretize)->Arg(200)->Arg(2000);
