#include <benchmark/benchmark.h>

#include "pgdus/distribution.hpp"
#include "pgdus/reliability.hpp"

namespace {

void BM_r_multi(benchmark::State& state) {
  const pgdus::MultiComponentSpec spec{1, static_cast<int>(state.range(0))};
  double g = 0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(pgdus::r_multi(spec, g, 1.3));
    g = g < 3.0 ? g + 0.01 : 0.5;
  }
}
BENCHMARK(BM_r_multi)->Arg(2)->Arg(10)->Arg(25);

void BM_r_multi_alternating(benchmark::State& state) {
  const pgdus::MultiComponentSpec spec{1, static_cast<int>(state.range(0))};
  double g = 0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(pgdus::r_multi_alternating(spec, g, 1.3));
    g = g < 3.0 ? g + 0.01 : 0.5;
  }
}
BENCHMARK(BM_r_multi_alternating)->Arg(2)->Arg(10);

void BM_estimate_r_mle(benchmark::State& state) {
  const pgdus::StressStrengthParams p{1, 1, 2, 1};
  const auto n = static_cast<std::size_t>(state.range(0));
  const pgdus::TwoSample d{pgdus::sample(p.strength(), n, 1), pgdus::sample(p.stress(), n, 2)};
  for (auto _ : state) benchmark::DoNotOptimize(pgdus::estimate_r_mle(d));
}
BENCHMARK(BM_estimate_r_mle)->Arg(200)->Unit(benchmark::kMillisecond);

}  // namespace
