#include <benchmark/benchmark.h>

#include <vector>

#include "pgdus/distribution.hpp"
#include "pgdus/sample.hpp"

namespace {

const pgdus::Params kParams{2.0, 1.0, 1.5};

std::vector<double> points(std::size_t n) {
  std::vector<double> t(n);
  for (std::size_t i = 0; i < n; ++i) t[i] = 0.05 + 5.0 * static_cast<double>(i) / static_cast<double>(n);
  return t;
}

void BM_pdf(benchmark::State& state) {
  const auto t = points(1024);
  for (auto _ : state) {
    double acc = 0.0;
    for (double x : t) acc += pgdus::pgdusiw_pdf(kParams, x);
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(t.size()));
}
BENCHMARK(BM_pdf);

void BM_cdf(benchmark::State& state) {
  const auto t = points(1024);
  for (auto _ : state) {
    double acc = 0.0;
    for (double x : t) acc += pgdus::pgdusiw_cdf(kParams, x);
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(t.size()));
}
BENCHMARK(BM_cdf);

void BM_quantile(benchmark::State& state) {
  std::vector<double> u(1024);
  for (std::size_t i = 0; i < u.size(); ++i) u[i] = (static_cast<double>(i) + 0.5) / static_cast<double>(u.size());
  for (auto _ : state) {
    double acc = 0.0;
    for (double p : u) acc += pgdus::pgdusiw_quantile(kParams, p);
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(u.size()));
}
BENCHMARK(BM_quantile);

// generic path through a Weibull baseline
void BM_generic_pdf(benchmark::State& state) {
  const pgdus::PgdusModel m(pgdus::Baseline::weibull(1.5, 2.0), 0.7);
  const auto t = points(1024);
  for (auto _ : state) {
    double acc = 0.0;
    for (double x : t) acc += m.pdf(x);
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(t.size()));
}
BENCHMARK(BM_generic_pdf);

void BM_sample(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(pgdus::sample(kParams, static_cast<std::size_t>(state.range(0)), ++seed));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_sample)->Arg(1000)->Arg(100000);

}  // namespace
