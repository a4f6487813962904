// Serial vs OpenMP trial runner and refinement enumeration.

#include <benchmark/benchmark.h>

#include "phinlab/random_modules.hpp"
#include "phinlab/trials.hpp"

using namespace phinlab;

namespace {

void run_suite(benchmark::State& state, const TrialFn& fn, Execution exec) {
  const int trials = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto res = run_trials(trials, 7, fn, exec);
    benchmark::DoNotOptimize(res);
  }
  state.SetItemsProcessed(state.iterations() * trials);
}

void BM_MarkedSerial(benchmark::State& s) { run_suite(s, marked_criterion_trial, Execution::Serial); }
void BM_MarkedParallel(benchmark::State& s) { run_suite(s, marked_criterion_trial, Execution::Parallel); }
void BM_DualitySerial(benchmark::State& s) { run_suite(s, nf_duality_trial, Execution::Serial); }
void BM_DualityParallel(benchmark::State& s) { run_suite(s, nf_duality_trial, Execution::Parallel); }
void BM_WellDefinedSerial(benchmark::State& s) { run_suite(s, well_defined_trial, Execution::Serial); }
void BM_WellDefinedParallel(benchmark::State& s) { run_suite(s, well_defined_trial, Execution::Parallel); }

// A rank-4 module with four distinct eigenvalues and N = 0: 24 flags.
FilteredPhiNModule enumeration_input() {
  const FieldContext ctx = FieldContext::make(3, 1, 2);
  FilteredPhiNModule d;
  d.ctx = ctx;
  d.n = 4;
  Rng rng(5);
  const Matrix p = random_invertible(rng, 4);
  const Matrix phi0 = p * Matrix::diagonal({1, 3, Scalar(1, 3), 9}) * *inverse(p);
  d.phi = {phi0, Matrix::identity(4)};
  d.N = {Matrix(4, 4), Matrix(4, 4)};
  for (int k = 0; k < 2; ++k) d.filtration.push_back({{0, Subspace::full(4)}, {1, Subspace::span(4, {{1, 2, 0, 1}})}});
  return d;
}

void enumerate(benchmark::State& state, Execution exec) {
  const FilteredPhiNModule d = enumeration_input();
  for (auto _ : state) {
    auto refs = enumerate_refinements(d, exec);
    benchmark::DoNotOptimize(refs);
  }
}

void BM_EnumerateSerial(benchmark::State& s) { enumerate(s, Execution::Serial); }
void BM_EnumerateParallel(benchmark::State& s) { enumerate(s, Execution::Parallel); }

}  // namespace

BENCHMARK(BM_MarkedSerial)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MarkedParallel)->Arg(64)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_DualitySerial)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DualityParallel)->Arg(64)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_WellDefinedSerial)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WellDefinedParallel)->Arg(64)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_EnumerateSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateParallel)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
