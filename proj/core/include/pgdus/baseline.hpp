#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string_view>

namespace pgdus {

enum class BaselineKind {
  inverse_weibull,      // F = exp(-(t/theta)^-lambda);           (lambda, theta)
  weibull,              // F = 1 - exp(-(t/scale)^shape);         (shape, scale)
  lomax,                // F = 1 - (1 + t/scale)^-shape;          (shape, scale)
  inverse_kumaraswamy,  // F = (1 - (1 + t)^-alpha)^beta;         (alpha, beta)
  exponential,          // F = 1 - exp(-rate t);                  (rate)
};

std::size_t param_count(BaselineKind kind);

// Short identifier: "iw", "w", "l", "ik", "e".
std::string_view short_name(BaselineKind kind);

// Names of the baseline parameters, in storage order.
std::span<const std::string_view> param_names(BaselineKind kind);

// Baseline quantities needed by the PGDUS transform at a single t > 0.
struct BaselineEval {
  double log_cdf;  // ln F(t)
  double sf;       // 1 - F(t), accurate in the upper tail
  double log_pdf;  // ln f(t)
};

// A baseline lifetime distribution with bound parameters.
class Baseline {
 public:
  Baseline(BaselineKind kind, std::span<const double> params);

  static Baseline inverse_weibull(double lambda, double theta);
  static Baseline weibull(double shape, double scale);
  static Baseline lomax(double shape, double scale);
  static Baseline inverse_kumaraswamy(double alpha, double beta);
  static Baseline exponential(double rate);

  BaselineKind kind() const { return kind_; }
  std::size_t param_count() const { return pgdus::param_count(kind_); }
  std::span<const double> params() const { return {params_.data(), param_count()}; }

  // Requires t > 0.
  BaselineEval evaluate(double t) const;

  // Total over real t.
  double cdf(double t) const;
  double sf(double t) const;
  double pdf(double t) const;

  // Inverse of F at u in (0,1), and inverse of the survival function at
  // s in (0,1). The latter keeps precision far into the upper tail.
  double quantile(double u) const;
  double quantile_sf(double s) const;
  // Inverse of F given ln u < 0, for probabilities below the double range.
  double quantile_log(double log_u) const;

 private:
  BaselineKind kind_;
  std::array<double, 2> params_{};
};

}  // namespace pgdus
