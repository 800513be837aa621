#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pgdus/distribution.hpp"
#include "pgdus/estimation.hpp"
#include "pgdus/sample.hpp"

namespace pgdus {

// Fraction of observations <= t.
double ecdf(const Sample& s, double t);

// Statistics of the sample against a fully specified model. All three depend
// on the data only through the fitted CDF at the order statistics.
double ks_statistic(const Sample& s, const PgdusModel& m);
double ad_statistic(const Sample& s, const PgdusModel& m);  // +inf if some F is 0 or 1
double cvm_statistic(const Sample& s, const PgdusModel& m);
double ks_statistic(const Sample& s, const Params& p);
double ad_statistic(const Sample& s, const Params& p);
double cvm_statistic(const Sample& s, const Params& p);

enum class GofStatistic { ks, ad, cvm };

struct GofStatistics {
  double ks = 0.0;
  double ad = 0.0;
  double cvm = 0.0;
};

GofStatistics gof_statistics(const Sample& s, const PgdusModel& m);

struct BootstrapResult {
  GofStatistics observed;
  double ks_p = 1.0;
  double ad_p = 1.0;
  double cvm_p = 1.0;
  std::size_t used = 0;    // resamples whose refit converged
  std::size_t failed = 0;  // resamples dropped

  double p(GofStatistic which) const;
};

// Parametric bootstrap for the composite hypothesis "s comes from some member
// of the family". Resample b is drawn from `fit` with seed
// derive_seed(seed, {b, 0}), refitted with the same method and options
// (restart seed derive_seed(seed, {b, 1})), and its statistics compared with
// the observed ones: p = (1 + #{boot >= observed}) / (used + 1).
// Requires B >= 100. Throws NumericalError when every refit fails.
BootstrapResult bootstrap_pvalues(const Sample& s, const FitResult& fit, std::size_t B,
                                  std::uint64_t seed, const FitOptions& opts = {});

// Fits PGDUS-IW by ML and bootstraps one statistic.
double bootstrap_pvalue(const Sample& s, Method method, GofStatistic stat, std::size_t B,
                        std::uint64_t seed);

struct InfoCriteria {
  double aicc = 0.0;
  double bicc = 0.0;
};

// AICc = -2 l + 2k + 2k(k+1)/(n-k-1), BICc = -2 l + k ln n (1 + (k+1)/(n-k-1)),
// where l is the log-likelihood at the estimate (for MPS fits too) and k the
// number of fitted parameters. DomainError when n <= k + 1.
InfoCriteria info_criteria(double log_likelihood, std::size_t n, std::size_t k);
InfoCriteria info_criteria(const FitResult& fit);

struct GofReport {
  std::string model;  // "pgdus-iw", ...
  Method method = Method::ml;
  std::optional<FitResult> fit;  // empty when fitting threw
  bool ok = false;               // fit converged and statistics are available
  std::string diagnostic;        // why ok is false
  GofStatistics stats;
  double ks_p = 0.0, ad_p = 0.0, cvm_p = 0.0;  // NaN when no bootstrap was run
  std::size_t bootstrap_used = 0;
  std::size_t bootstrap_failed = 0;
  double aicc = 0.0;
  double bicc = 0.0;
  int rank = 0;  // 1-based AICc rank within the method
};

struct CompareOptions {
  std::vector<Method> methods{Method::ml, Method::mps};
  std::size_t B = 500;  // 0 skips the bootstrap
  std::uint64_t seed = 2024;
  FitOptions fit{};
};

// Fits every model with every method, computes statistics, criteria and
// bootstrap p-values, and orders the reports method by method with the
// AICc ranking inside each method; failed fits come last.
std::vector<GofReport> compare_models(const Sample& s, const std::vector<BaselineKind>& models,
                                      const CompareOptions& opts = {});

}  // namespace pgdus
