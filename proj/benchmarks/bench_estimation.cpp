#include <benchmark/benchmark.h>

#include "pgdus/distribution.hpp"
#include "pgdus/estimation.hpp"
#include "pgdus/gof.hpp"
#include "pgdus/sample.hpp"

namespace {

const pgdus::Params kTruth{1.0, 0.6, 0.3};

void BM_fit_mle(benchmark::State& state) {
  const pgdus::Sample s = pgdus::sample(kTruth, static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(pgdus::fit_mle(s));
}
BENCHMARK(BM_fit_mle)->Arg(50)->Arg(350)->Unit(benchmark::kMillisecond);

void BM_fit_mps(benchmark::State& state) {
  const pgdus::Sample s = pgdus::sample(kTruth, static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(pgdus::fit_mps(s));
}
BENCHMARK(BM_fit_mps)->Arg(50)->Arg(350)->Unit(benchmark::kMillisecond);

void BM_log_likelihood(benchmark::State& state) {
  const pgdus::Sample s = pgdus::sample(kTruth, 350, 1);
  for (auto _ : state) benchmark::DoNotOptimize(pgdus::log_likelihood(kTruth, s));
  state.SetItemsProcessed(state.iterations() * 350);
}
BENCHMARK(BM_log_likelihood);

void BM_bootstrap(benchmark::State& state) {
  const pgdus::Sample relief = pgdus::relief_times();
  const pgdus::FitResult fit = pgdus::fit_mle(relief);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pgdus::bootstrap_pvalues(relief, fit, static_cast<std::size_t>(state.range(0)), 7));
  }
}
BENCHMARK(BM_bootstrap)->Arg(100)->Unit(benchmark::kMillisecond);

}  // namespace
