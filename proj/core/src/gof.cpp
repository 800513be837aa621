#include "pgdus/gof.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pgdus/error.hpp"
#include "pgdus/numeric.hpp"
#include "pgdus/parallel.hpp"
#include "pgdus/rng.hpp"

namespace pgdus {

namespace {

void require_nonempty(const Sample& s) {
  if (s.empty()) throw SampleError("goodness-of-fit statistics need a nonempty sample");
}

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

}  // namespace

double ecdf(const Sample& s, double t) {
  require_nonempty(s);
  const auto sorted = s.sorted();
  const auto count = std::upper_bound(sorted.begin(), sorted.end(), t) - sorted.begin();
  return static_cast<double>(count) / static_cast<double>(sorted.size());
}

double ks_statistic(const Sample& s, const PgdusModel& m) {
  require_nonempty(s);
  const auto sorted = s.sorted();
  const auto n = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = m.cdf(sorted[i]);
    d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
  }
  return d;
}

double ad_statistic(const Sample& s, const PgdusModel& m) {
  require_nonempty(s);
  const auto sorted = s.sorted();
  const std::size_t n = sorted.size();
  CompensatedSum sum;
  for (std::size_t i = 0; i < n; ++i) {
    const double log_f = m.log_cdf(sorted[i]);
    const double log_s = m.log_sf(sorted[n - 1 - i]);
    // F of exactly 0 or 1 in double precision makes the statistic infinite,
    // even when the log forms are still representable.
    if (!(std::exp(log_f) > 0.0) || !(std::exp(log_s) > 0.0)) return kInf;
    sum.add(static_cast<double>(2 * i + 1) * (log_f + log_s));
  }
  const auto nn = static_cast<double>(n);
  return std::max(0.0, -nn - sum.value() / nn);
}

double cvm_statistic(const Sample& s, const PgdusModel& m) {
  require_nonempty(s);
  const auto sorted = s.sorted();
  const auto n = static_cast<double>(sorted.size());
  CompensatedSum sum;
  sum.add(1.0 / (12.0 * n));
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double d = m.cdf(sorted[i]) - static_cast<double>(2 * i + 1) / (2.0 * n);
    sum.add(d * d);
  }
  return sum.value();
}

double ks_statistic(const Sample& s, const Params& p) { return ks_statistic(s, PgdusModel(p)); }
double ad_statistic(const Sample& s, const Params& p) { return ad_statistic(s, PgdusModel(p)); }
double cvm_statistic(const Sample& s, const Params& p) { return cvm_statistic(s, PgdusModel(p)); }

GofStatistics gof_statistics(const Sample& s, const PgdusModel& m) {
  return {ks_statistic(s, m), ad_statistic(s, m), cvm_statistic(s, m)};
}

double BootstrapResult::p(GofStatistic which) const {
  switch (which) {
    case GofStatistic::ks:
      return ks_p;
    case GofStatistic::ad:
      return ad_p;
    case GofStatistic::cvm:
      return cvm_p;
  }
  return kNaN;
}

BootstrapResult bootstrap_pvalues(const Sample& s, const FitResult& fit, std::size_t B,
                                  std::uint64_t seed, const FitOptions& opts) {
  if (B < 100) throw ParameterError("bootstrap needs B >= 100");
  BootstrapResult out;
  out.observed = gof_statistics(s, fit.model);

  std::vector<GofStatistics> boot(B);
  std::vector<unsigned char> ok(B, 0);
  parallel_for(B, [&](std::size_t b) {
    try {
      const Sample resample = fit.model.sample(s.size(), derive_seed(seed, {b, 0}));
      FitOptions refit_opts = opts;
      refit_opts.seed = derive_seed(seed, {b, 1});
      const FitResult refit = fit_model(resample, fit.model.kind(), fit.method, refit_opts);
      if (!refit.converged) return;
      boot[b] = gof_statistics(resample, refit.model);
      ok[b] = 1;
    } catch (const std::exception&) {
      // dropped and counted below
    }
  });

  std::size_t ks = 0, ad = 0, cvm = 0;
  for (std::size_t b = 0; b < B; ++b) {
    if (!ok[b]) continue;
    ++out.used;
    ks += boot[b].ks >= out.observed.ks;
    ad += boot[b].ad >= out.observed.ad;
    cvm += boot[b].cvm >= out.observed.cvm;
  }
  out.failed = B - out.used;
  if (out.used == 0) throw NumericalError("every bootstrap refit failed");
  const auto denom = static_cast<double>(out.used + 1);
  out.ks_p = static_cast<double>(ks + 1) / denom;
  out.ad_p = static_cast<double>(ad + 1) / denom;
  out.cvm_p = static_cast<double>(cvm + 1) / denom;
  return out;
}

double bootstrap_pvalue(const Sample& s, Method method, GofStatistic stat, std::size_t B,
                        std::uint64_t seed) {
  FitOptions opts;
  opts.seed = derive_seed(seed, {~std::uint64_t{0}});
  const FitResult fit = fit_model(s, BaselineKind::inverse_weibull, method, opts);
  return bootstrap_pvalues(s, fit, B, seed, opts).p(stat);
}

InfoCriteria info_criteria(double log_likelihood, std::size_t n, std::size_t k) {
  if (n <= k + 1) {
    throw DomainError("information criteria need n > k + 1 (n=" + std::to_string(n) +
                      ", k=" + std::to_string(k) + ")");
  }
  const auto nn = static_cast<double>(n);
  const auto kk = static_cast<double>(k);
  const double correction = (kk + 1.0) / (nn - kk - 1.0);
  InfoCriteria out;
  out.aicc = -2.0 * log_likelihood + 2.0 * kk + 2.0 * kk * correction;
  out.bicc = -2.0 * log_likelihood + kk * std::log(nn) * (1.0 + correction);
  return out;
}

InfoCriteria info_criteria(const FitResult& fit) {
  return info_criteria(fit.log_likelihood, fit.n, fit.model.param_count());
}

std::vector<GofReport> compare_models(const Sample& s, const std::vector<BaselineKind>& models,
                                      const CompareOptions& opts) {
  if (models.size() < 2) throw ParameterError("model comparison needs at least two models");
  if (opts.methods.empty()) throw ParameterError("model comparison needs at least one method");
  if (opts.B != 0 && opts.B < 100) throw ParameterError("bootstrap needs B >= 100 (or 0 to skip)");

  std::vector<GofReport> all;
  for (std::size_t mi = 0; mi < opts.methods.size(); ++mi) {
    std::vector<GofReport> block;
    for (std::size_t k = 0; k < models.size(); ++k) {
      GofReport r;
      r.model = model_name(models[k]);
      r.method = opts.methods[mi];
      r.ks_p = r.ad_p = r.cvm_p = kNaN;
      r.aicc = r.bicc = kNaN;
      try {
        r.fit = fit_model(s, models[k], r.method, opts.fit);
        r.stats = gof_statistics(s, r.fit->model);
        const InfoCriteria ic = info_criteria(*r.fit);
        r.aicc = ic.aicc;
        r.bicc = ic.bicc;
        if (!r.fit->converged) {
          r.diagnostic = "optimizer did not converge";
        } else if (!std::isfinite(r.fit->log_likelihood)) {
          r.diagnostic = "log-likelihood is not finite at the estimate";
        } else {
          r.ok = true;
        }
        if (r.ok && opts.B > 0) {
          const BootstrapResult boot =
              bootstrap_pvalues(s, *r.fit, opts.B, derive_seed(opts.seed, {mi, k}), opts.fit);
          r.ks_p = boot.ks_p;
          r.ad_p = boot.ad_p;
          r.cvm_p = boot.cvm_p;
          r.bootstrap_used = boot.used;
          r.bootstrap_failed = boot.failed;
        }
      } catch (const std::exception& e) {
        r.ok = false;
        r.diagnostic = e.what();
      }
      block.push_back(std::move(r));
    }
    std::stable_sort(block.begin(), block.end(), [](const GofReport& a, const GofReport& b) {
      if (a.ok != b.ok) return a.ok;
      if (!a.ok) return false;
      return a.aicc < b.aicc;
    });
    for (std::size_t i = 0; i < block.size(); ++i) block[i].rank = static_cast<int>(i + 1);
    for (GofReport& r : block) all.push_back(std::move(r));
  }
  return all;
}

}  // namespace pgdus
