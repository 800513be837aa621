#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pgdus/baseline.hpp"
#include "pgdus/params.hpp"

namespace pgdus {

class Sample;

// ---------------------------------------------------------------------------
// Generic PGDUS transform of an arbitrary baseline:
//   F(t) = ((e^{F_base(t)} - 1) / (e - 1))^gamma,  t > 0.
// Every function below returns the lower-support value for t <= 0 and throws
// ParameterError for gamma <= 0.

double pgdus_cdf(const Baseline& base, double gamma, double t);
double pgdus_sf(const Baseline& base, double gamma, double t);
double pgdus_pdf(const Baseline& base, double gamma, double t);
double pgdus_log_pdf(const Baseline& base, double gamma, double t);
double pgdus_hazard(const Baseline& base, double gamma, double t);
double pgdus_quantile(const Baseline& base, double gamma, double prob);

// ---------------------------------------------------------------------------
// PGDUS-IW closed forms, written directly in terms of z = (t/theta)^-lambda.
// All exponent chains are evaluated in log space; the density is exactly 0
// (never NaN) once the inner exponent underflows.
// Each throws ParameterError for invalid parameters.

double pgdusiw_cdf(const Params& p, double t);
double pgdusiw_log_cdf(const Params& p, double t);
// Returns 1 for t <= 0 so that sf = 1 - cdf holds on the whole real line.
double pgdusiw_sf(const Params& p, double t);
double pgdusiw_log_sf(const Params& p, double t);
double pgdusiw_pdf(const Params& p, double t);
double pgdusiw_log_pdf(const Params& p, double t);
// pdf/sf; +inf once the survival function underflows, 0 for t <= 0.
double pgdusiw_hazard(const Params& p, double t);

// theta * [-ln ln(1 + (e-1) prob^(1/gamma))]^(-1/lambda); the upper half of
// (0,1) is routed through the survival form to keep precision near 1.
double pgdusiw_quantile(const Params& p, double prob);
// Inverse of the survival function: the t with sf(t) = tail.
double pgdusiw_quantile_sf(const Params& p, double tail);

// ln[(e^{e^{-z}} - 1)/(e - 1)] at a single observation, i.e. ln F(t)/gamma.
// Exposed for the closed-form gamma estimators.
double pgdusiw_log_dus_ratio(double lambda, double theta, double t);

// n independent PGDUS-IW draws by inversion. Same seed, same sample.
Sample sample(const Params& p, std::size_t n, std::uint64_t seed);

// ---------------------------------------------------------------------------
// A PGDUS model over one of the supported baselines, with bound parameters.
// Packed parameter order is (baseline parameters..., gamma).

class PgdusModel {
 public:
  PgdusModel(Baseline base, double gamma);
  explicit PgdusModel(const Params& p);
  PgdusModel(BaselineKind kind, std::span<const double> packed);

  BaselineKind kind() const { return base_.kind(); }
  const Baseline& baseline() const { return base_; }
  double gamma() const { return gamma_; }
  std::size_t param_count() const { return base_.param_count() + 1; }
  std::vector<double> packed() const;

  // Only valid for inverse-Weibull baselines.
  Params iw_params() const;

  // "pgdus-iw", "pgdus-w", ...
  std::string name() const;

  double cdf(double t) const;
  double log_cdf(double t) const;
  double sf(double t) const;
  double log_sf(double t) const;
  double pdf(double t) const;
  double log_pdf(double t) const;
  double hazard(double t) const;
  double quantile(double prob) const;

  Sample sample(std::size_t n, std::uint64_t seed) const;

 private:
  Baseline base_;
  double gamma_;
};

// Accepts "pgdus-iw", "iw", "pgdus-w", ... (case-insensitive).
BaselineKind parse_model_name(std::string_view name);
std::string model_name(BaselineKind kind);

}  // namespace pgdus
