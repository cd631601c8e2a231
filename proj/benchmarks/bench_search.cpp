#include <benchmark/benchmark.h>

#include "circulant/composition.hpp"
#include "circulant/disconnection.hpp"

using namespace circulant;

namespace {

// The slowest honest case: proving a cyclic tournament tight means
// exhausting the whole 3-class search space.
void BM_is_tight_cyclic(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    CirculantTournament t(SymbolSet::cyclic(n));
    SearchLimits limits;
    limits.allow_slow = true;
    for (auto _ : state) benchmark::DoNotOptimize(is_tight(t, limits));
}
BENCHMARK(BM_is_tight_cyclic)->Arg(6)->Arg(7)->Arg(8)->Arg(9)
    ->Unit(benchmark::kMillisecond);

void BM_is_tight_composite(benchmark::State& state) {
    SymbolSet l = compose(SymbolSet::cyclic(1), SymbolSet::cyclic(3));  // order 21
    CirculantTournament t(l);
    for (auto _ : state) benchmark::DoNotOptimize(is_tight(t));
}
BENCHMARK(BM_is_tight_composite)->Unit(benchmark::kMillisecond);

void BM_omega3_value(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    CirculantTournament t(SymbolSet::cyclic(n));
    for (auto _ : state) benchmark::DoNotOptimize(omega3_value(t));
}
BENCHMARK(BM_omega3_value)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_omega_value(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    CirculantTournament t(SymbolSet::cyclic(n));
    for (auto _ : state) benchmark::DoNotOptimize(omega_value(t));
}
BENCHMARK(BM_omega_value)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_keenness(benchmark::State& state) {
    CirculantTournament t(SymbolSet::cyclic(5));
    for (auto _ : state)
        benchmark::DoNotOptimize(keenness_check(t, Variant::triangle_free));
}
BENCHMARK(BM_keenness)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
