#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "circulant/residue_set.hpp"

using namespace circulant;

namespace {

std::vector<ResidueSet> random_sets(int m, int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> word;
    std::vector<ResidueSet> out;
    while (static_cast<int>(out.size()) < count) {
        auto bits = (detail::u128{word(rng)} << 64) | word(rng);
        ResidueSet s = ResidueSet::from_bits(m, bits);
        if (!s.empty()) out.push_back(s);
    }
    return out;
}

void BM_sumset(benchmark::State& state) {
    int m = static_cast<int>(state.range(0));
    auto sets = random_sets(m, 64, 1);
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sumset(sets[i % 64], sets[(i + 1) % 64]));
        ++i;
    }
}
BENCHMARK(BM_sumset)->Arg(31)->Arg(63)->Arg(127);

void BM_period(benchmark::State& state) {
    int m = static_cast<int>(state.range(0));
    auto sets = random_sets(m, 64, 2);
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(period(sets[i % 64]));
        ++i;
    }
}
BENCHMARK(BM_period)->Arg(36)->Arg(60)->Arg(120);

void BM_quasi_periodic_witness(benchmark::State& state) {
    int m = static_cast<int>(state.range(0));
    auto sets = random_sets(m, 64, 3);
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(quasi_periodic_witness(sets[i % 64]));
        ++i;
    }
}
BENCHMARK(BM_quasi_periodic_witness)->Arg(45)->Arg(105);

void BM_arithmetic_progression(benchmark::State& state) {
    int m = static_cast<int>(state.range(0));
    auto sets = random_sets(m, 16, 4);
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(arithmetic_progression(sets[i % 16]));
        ++i;
    }
}
BENCHMARK(BM_arithmetic_progression)->Arg(31)->Arg(63);

}  // namespace

BENCHMARK_MAIN();
