#include <doctest.h>

#include <cmath>

#include "pgdus/distribution.hpp"
#include "pgdus/error.hpp"
#include "pgdus/gof.hpp"

using namespace pgdus;

namespace {

// Sample placed exactly at the plotting positions (i - 0.5)/n of p.
Sample plotting_position_sample(const Params& p, int n) {
  std::vector<double> v;
  for (int i = 1; i <= n; ++i) v.push_back(pgdusiw_quantile(p, (i - 0.5) / n));
  return Sample(v);
}

}  // namespace

TEST_SUITE("gof") {

TEST_CASE("empirical cdf") {
  const Sample relief = relief_times();
  CHECK(ecdf(relief, 1.0) == 0.0);
  CHECK(ecdf(relief, 4.1) == 1.0);
  CHECK(ecdf(relief, 100.0) == 1.0);
  CHECK(ecdf(relief, 1.7) == doctest::Approx(0.55).epsilon(1e-15));
  // ties jump by their multiplicity
  const Sample tied({1.0, 2.0, 2.0, 2.0, 3.0});
  CHECK(ecdf(tied, 1.999) == doctest::Approx(0.2));
  CHECK(ecdf(tied, 2.0) == doctest::Approx(0.8));
}

TEST_CASE("statistics at the plotting positions") {
  const Params p{1, 0.6, 0.3};
  for (int n : {5, 20, 101}) {
    const Sample s = plotting_position_sample(p, n);
    CHECK(ks_statistic(s, p) == doctest::Approx(0.5 / n).epsilon(1e-9));
    CHECK(cvm_statistic(s, p) == doctest::Approx(1.0 / (12.0 * n)).epsilon(1e-9));
    double a2 = -n;
    for (int i = 1; i <= n; ++i) {
      const double u = (i - 0.5) / n, w = (n - i + 0.5) / n;
      a2 -= (2.0 * i - 1) / n * (std::log(u) + std::log1p(-w));
    }
    CHECK(ad_statistic(s, p) == doctest::Approx(a2).epsilon(1e-8));
  }
}

TEST_CASE("statistic ranges") {
  const Sample relief = relief_times();
  for (const Params& p : {Params{4.4, 1.45, 1.0}, Params{1, 0.6, 0.3}, Params{5, 10, 3}}) {
    const double ks = ks_statistic(relief, p);
    CHECK(ks >= 0.0);
    CHECK(ks <= 1.0);
    CHECK(ad_statistic(relief, p) >= 0.0);
    CHECK(cvm_statistic(relief, p) >= 1.0 / (12.0 * relief.size()));
  }
  // the model puts all its mass far above the data
  CHECK(ks_statistic(relief, Params{50, 1e6, 1}) == doctest::Approx(1.0));
  CHECK(ad_statistic(relief, Params{50, 1e6, 1}) == std::numeric_limits<double>::infinity());
}

TEST_CASE("self-sample statistics are small") {
  const Params p{1, 0.6, 0.3};
  const Sample big = sample(p, 100000, 3);
  CHECK(ks_statistic(big, p) < 0.01);
  const Sample mid = sample(p, 10000, 4);
  CHECK(ad_statistic(mid, p) < 3.857);   // upper 1% point of the null law
  CHECK(cvm_statistic(mid, p) < 0.743);  // upper 1% point of the null law
}

TEST_CASE("statistics depend on the data only through the fitted cdf") {
  // T^2 of PGDUS-IW(lambda, theta, gamma) is PGDUS-IW(lambda/2, theta^2, gamma)
  const Params p{3, 1.2, 0.8};
  const Sample s = sample({2.5, 1.0, 1.3}, 60, 21);
  std::vector<double> sq;
  for (double t : s.values()) sq.push_back(t * t);
  const Sample s2(sq);
  const Params p2{p.lambda / 2, p.theta * p.theta, p.gamma};
  CHECK(ks_statistic(s2, p2) == doctest::Approx(ks_statistic(s, p)).epsilon(1e-10));
  CHECK(ad_statistic(s2, p2) == doctest::Approx(ad_statistic(s, p)).epsilon(1e-10));
  CHECK(cvm_statistic(s2, p2) == doctest::Approx(cvm_statistic(s, p)).epsilon(1e-10));
  const GofStatistics g = gof_statistics(s, PgdusModel(p));
  CHECK(g.ks == ks_statistic(s, p));
  CHECK(g.ad == ad_statistic(s, p));
  CHECK(g.cvm == cvm_statistic(s, p));
}

TEST_CASE("information criteria") {
  const InfoCriteria ic = info_criteria(-15.0, 20, 3);
  CHECK(ic.aicc == doctest::Approx(30.0 + 6.0 + 24.0 / 16.0).epsilon(1e-14));
  CHECK(ic.bicc == doctest::Approx(30.0 + 3 * std::log(20.0) * (1 + 4.0 / 16.0)).epsilon(1e-14));
  CHECK(ic.aicc > 30.0 + 6.0);
  CHECK(ic.bicc > 30.0 + 3 * std::log(20.0));
  const InfoCriteria big = info_criteria(-15.0, 10000, 3);
  CHECK(big.aicc - 36.0 < 0.01);
  CHECK_THROWS_AS(info_criteria(-15.0, 4, 3), DomainError);
  CHECK_NOTHROW(info_criteria(-15.0, 5, 3));

  const FitResult f = fit_mle(relief_times());
  const InfoCriteria fi = info_criteria(f);
  CHECK(fi.aicc == doctest::Approx(-2 * f.objective + 6 + 24.0 / 16.0).epsilon(1e-14));
  // MPS fits are scored by the likelihood at their estimate
  const FitResult g = fit_mps(relief_times());
  CHECK(info_criteria(g).aicc == doctest::Approx(-2 * g.log_likelihood + 7.5).epsilon(1e-14));
}

TEST_CASE("bootstrap p-values") {
  const Sample relief = relief_times();
  const FitResult f = fit_mle(relief);
  const BootstrapResult a = bootstrap_pvalues(relief, f, 100, 5);
  const BootstrapResult b = bootstrap_pvalues(relief, f, 100, 5);
  CHECK(a.used + a.failed == 100);
  CHECK(a.used > 80);
  for (GofStatistic st : {GofStatistic::ks, GofStatistic::ad, GofStatistic::cvm}) {
    CHECK(a.p(st) >= 1.0 / (a.used + 1));
    CHECK(a.p(st) <= 1.0);
    CHECK(a.p(st) == b.p(st));
  }
  CHECK(a.observed.ks == ks_statistic(relief, f.params()));
  CHECK_THROWS_AS(bootstrap_pvalues(relief, f, 99, 5), ParameterError);
  const double p = bootstrap_pvalue(relief, Method::ml, GofStatistic::ks, 100, 5);
  CHECK(p == bootstrap_pvalue(relief, Method::ml, GofStatistic::ks, 100, 5));
  CHECK(p > 0.05);
}

TEST_CASE("model comparison") {
  CompareOptions opts;
  opts.methods = {Method::ml};
  opts.B = 0;
  CHECK_THROWS_AS(compare_models(relief_times(), {BaselineKind::inverse_weibull}, opts), ParameterError);

  const PgdusModel truth(Baseline::weibull(1.5, 2.0), 2.0);
  const Sample s = truth.sample(500, 77);
  const auto reports = compare_models(
      s, {BaselineKind::inverse_weibull, BaselineKind::weibull, BaselineKind::lomax, BaselineKind::inverse_kumaraswamy},
      opts);
  REQUIRE(reports.size() == 4);
  CHECK(reports.front().model == "pgdus-w");
  CHECK(reports.front().rank == 1);
  for (std::size_t i = 0; i < reports.size(); ++i) {
    CHECK(reports[i].rank == static_cast<int>(i) + 1);
    CHECK(std::isnan(reports[i].ks_p));
    if (i > 0 && reports[i].ok && reports[i - 1].ok) CHECK(reports[i - 1].aicc <= reports[i].aicc);
  }
}

TEST_CASE("model comparison is reproducible") {
  CompareOptions opts;
  opts.B = 100;
  opts.seed = 11;
  const std::vector<BaselineKind> models{BaselineKind::inverse_weibull, BaselineKind::lomax};
  const auto a = compare_models(relief_times(), models, opts);
  const auto b = compare_models(relief_times(), models, opts);
  REQUIRE(a.size() == 4);
  REQUIRE(b.size() == 4);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].model == b[i].model);
    CHECK(a[i].method == b[i].method);
    CHECK(a[i].rank == b[i].rank);
    // non-converged fits carry NaN p-values; those must match as NaN
    const auto same = [](double x, double y) { return x == y || (std::isnan(x) && std::isnan(y)); };
    CHECK(same(a[i].aicc, b[i].aicc));
    CHECK(same(a[i].ks_p, b[i].ks_p));
    CHECK(same(a[i].ad_p, b[i].ad_p));
  }
}

}  // TEST_SUITE

TEST_SUITE("bootstrap calibration") {

TEST_CASE("p-values of well-specified samples are roughly uniform") {
  // samples drawn from the relief-data fit, n = 20, B = 100
  const Params fitted{4.3995149297, 1.45307614474, 1.01192326168};
  int low = 0;
  const int trials = 200;
  for (int i = 0; i < trials; ++i) {
    const Sample s = sample(fitted, 20, 5000 + i);
    const FitResult f = fit_mle(s);
    const BootstrapResult b = bootstrap_pvalues(s, f, 100, 9000 + i);
    if (b.ks_p < 0.1) ++low;
  }
  const double frac = static_cast<double>(low) / trials;
  CAPTURE(frac);
  CHECK(frac >= 0.05);
  CHECK(frac <= 0.18);
}

}  // TEST_SUITE
