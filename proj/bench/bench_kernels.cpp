// Serial reference kernels against their OpenMP counterparts. The normalize
// cache is cleared before every iteration so both start cold.

#include <benchmark/benchmark.h>

#include "w22/structure.hpp"

namespace {

using namespace w22;

const WhittakerType kPhi(1, 1, 2, 3);

Truncation window(const benchmark::State& state) {
  return {static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 2};
}

template <LinearSystem (*Assemble)(const WhittakerModule&, const Truncation&)>
void assemble(benchmark::State& state) {
  const Truncation t = window(state);
  for (auto _ : state) {
    state.PauseTiming();
    clear_normalize_cache();
    const WhittakerModule module(kPhi, QuotientSpec::universal());
    state.ResumeTiming();
    benchmark::DoNotOptimize(Assemble(module, t));
  }
  state.counters["columns"] = static_cast<double>(basis_enumerate(QuotientSpec::universal(), t).size());
}

template <ClosureResult (*Close)(const WhittakerModule&, const ModuleVector&, const Truncation&)>
void closure(benchmark::State& state) {
  const Truncation t{static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 0};
  const QuotientSpec spec = QuotientSpec::quotient(1, 2);
  for (auto _ : state) {
    state.PauseTiming();
    clear_normalize_cache();
    const WhittakerModule module(kPhi, spec);
    const ModuleVector seed = ModuleVector::cyclic(spec).scaled(CentralPoly::linear(1));
    state.ResumeTiming();
    benchmark::DoNotOptimize(Close(module, seed, t));
  }
}

void windows(benchmark::internal::Benchmark* b) {
  b->Args({3, 2})->Args({4, 3})->Args({5, 4})->Unit(benchmark::kMillisecond)->UseRealTime();
}

void closure_windows(benchmark::internal::Benchmark* b) {
  b->Args({2, 2})->Args({3, 2})->Unit(benchmark::kMillisecond)->UseRealTime();
}

}  // namespace

BENCHMARK(assemble<assemble_system_serial>)->Name("assemble/serial")->Apply(windows);
BENCHMARK(assemble<assemble_system>)->Name("assemble/openmp")->Apply(windows);
BENCHMARK(closure<submodule_closure_serial>)->Name("closure/serial")->Apply(closure_windows);
BENCHMARK(closure<submodule_closure>)->Name("closure/openmp")->Apply(closure_windows);

BENCHMARK_MAIN();
