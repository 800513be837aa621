#include "pgdus/baseline.hpp"

#include <cmath>
#include <string>

#include "pgdus/error.hpp"
#include "pgdus/numeric.hpp"

namespace pgdus {

namespace {

constexpr std::array<std::string_view, 2> kIwNames{"lambda", "theta"};
constexpr std::array<std::string_view, 2> kShapeScaleNames{"shape", "scale"};
constexpr std::array<std::string_view, 2> kIkNames{"alpha", "beta"};
constexpr std::array<std::string_view, 1> kExpNames{"rate"};

// ln(1 - e^{-y}) from ln y; keeps the power-law behaviour once y underflows.
double log_one_minus_exp_neg(double log_y) {
  if (log_y < -30.0) return log_y - 0.5 * std::exp(log_y);
  return std::log(-std::expm1(-std::exp(log_y)));
}

}  // namespace

std::size_t param_count(BaselineKind kind) {
  return kind == BaselineKind::exponential ? 1 : 2;
}

std::string_view short_name(BaselineKind kind) {
  switch (kind) {
    case BaselineKind::inverse_weibull: return "iw";
    case BaselineKind::weibull: return "w";
    case BaselineKind::lomax: return "l";
    case BaselineKind::inverse_kumaraswamy: return "ik";
    case BaselineKind::exponential: return "e";
  }
  return "?";
}

std::span<const std::string_view> param_names(BaselineKind kind) {
  switch (kind) {
    case BaselineKind::inverse_weibull: return kIwNames;
    case BaselineKind::weibull:
    case BaselineKind::lomax: return kShapeScaleNames;
    case BaselineKind::inverse_kumaraswamy: return kIkNames;
    case BaselineKind::exponential: return kExpNames;
  }
  return {};
}

Baseline::Baseline(BaselineKind kind, std::span<const double> params) : kind_(kind) {
  if (params.size() != pgdus::param_count(kind)) {
    throw ParameterError("baseline '" + std::string(short_name(kind)) + "' expects " +
                         std::to_string(pgdus::param_count(kind)) + " parameters, got " +
                         std::to_string(params.size()));
  }
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (!std::isfinite(params[i]) || params[i] <= 0.0) {
      throw ParameterError("baseline parameter '" + std::string(param_names(kind)[i]) +
                           "' must be finite and > 0");
    }
    params_[i] = params[i];
  }
}

Baseline Baseline::inverse_weibull(double lambda, double theta) {
  const std::array p{lambda, theta};
  return {BaselineKind::inverse_weibull, p};
}

Baseline Baseline::weibull(double shape, double scale) {
  const std::array p{shape, scale};
  return {BaselineKind::weibull, p};
}

Baseline Baseline::lomax(double shape, double scale) {
  const std::array p{shape, scale};
  return {BaselineKind::lomax, p};
}

Baseline Baseline::inverse_kumaraswamy(double alpha, double beta) {
  const std::array p{alpha, beta};
  return {BaselineKind::inverse_kumaraswamy, p};
}

Baseline Baseline::exponential(double rate) {
  const std::array p{rate};
  return {BaselineKind::exponential, p};
}

BaselineEval Baseline::evaluate(double t) const {
  const double a = params_[0];
  const double b = params_[1];
  switch (kind_) {
    case BaselineKind::inverse_weibull: {
      const double log_ratio = std::log(t) - std::log(b);
      const double z = std::exp(-a * log_ratio);
      return {-z, -std::expm1(-z), std::log(a) - std::log(b) - (a + 1.0) * log_ratio - z};
    }
    case BaselineKind::weibull: {
      const double log_ratio = std::log(t) - std::log(b);
      const double y = std::exp(a * log_ratio);
      return {log_one_minus_exp_neg(a * log_ratio), std::exp(-y),
              std::log(a) - std::log(b) + (a - 1.0) * log_ratio - y};
    }
    case BaselineKind::lomax: {
      const double l1p = std::log1p(t / b);
      const double log_sf = -a * l1p;
      return {std::log(-std::expm1(log_sf)), std::exp(log_sf),
              std::log(a) - std::log(b) - (a + 1.0) * l1p};
    }
    case BaselineKind::inverse_kumaraswamy: {
      const double l1p = std::log1p(t);
      const double log_inner = log1mexp(-a * l1p);  // ln(1 - (1+t)^-alpha)
      const double log_cdf = b * log_inner;
      return {log_cdf, -std::expm1(log_cdf),
              std::log(a) + std::log(b) - (a + 1.0) * l1p + (b - 1.0) * log_inner};
    }
    case BaselineKind::exponential: {
      const double y = a * t;
      return {log_one_minus_exp_neg(std::log(a) + std::log(t)), std::exp(-y), std::log(a) - y};
    }
  }
  return {-kInf, 1.0, -kInf};
}

double Baseline::cdf(double t) const {
  if (!(t > 0.0)) {
    return 0.0;
  }
  if (std::isinf(t)) {
    return 1.0;
  }
  return std::exp(evaluate(t).log_cdf);
}

double Baseline::sf(double t) const {
  if (!(t > 0.0)) {
    return 1.0;
  }
  if (std::isinf(t)) {
    return 0.0;
  }
  return evaluate(t).sf;
}

double Baseline::pdf(double t) const {
  if (!(t > 0.0) || std::isinf(t)) {
    return 0.0;
  }
  return std::exp(evaluate(t).log_pdf);
}

double Baseline::quantile(double u) const {
  if (!(u > 0.0 && u < 1.0)) {
    throw DomainError("baseline quantile requires 0 < u < 1");
  }
  const double a = params_[0];
  const double b = params_[1];
  switch (kind_) {
    case BaselineKind::inverse_weibull:
      return b * std::pow(-std::log(u), -1.0 / a);
    case BaselineKind::weibull:
      return b * std::pow(-std::log1p(-u), 1.0 / a);
    case BaselineKind::lomax:
      return b * std::expm1(-std::log1p(-u) / a);
    case BaselineKind::inverse_kumaraswamy:
      return std::expm1(-log1mexp(std::log(u) / b) / a);
    case BaselineKind::exponential:
      return -std::log1p(-u) / a;
  }
  return 0.0;
}

double Baseline::quantile_log(double log_u) const {
  if (!(log_u < 0.0)) {
    throw DomainError("baseline log quantile requires ln u < 0");
  }
  if (log_u > -30.0) return quantile(std::exp(log_u));
  const double a = params_[0];
  const double b = params_[1];
  // below e^-30, -ln(1 - u) and u agree to double precision
  switch (kind_) {
    case BaselineKind::inverse_weibull:
      return b * std::pow(-log_u, -1.0 / a);
    case BaselineKind::weibull:
      return b * std::exp(log_u / a);
    case BaselineKind::lomax:
      return b * std::exp(log_u - std::log(a));
    case BaselineKind::inverse_kumaraswamy:
      return std::expm1(-log1mexp(log_u / b) / a);
    case BaselineKind::exponential:
      return std::exp(log_u) / a;
  }
  return 0.0;
}

double Baseline::quantile_sf(double s) const {
  if (!(s > 0.0 && s < 1.0)) {
    throw DomainError("baseline survival quantile requires 0 < s < 1");
  }
  const double a = params_[0];
  const double b = params_[1];
  switch (kind_) {
    case BaselineKind::inverse_weibull:
      return b * std::pow(-std::log1p(-s), -1.0 / a);
    case BaselineKind::weibull:
      return b * std::pow(-std::log(s), 1.0 / a);
    case BaselineKind::lomax:
      return b * std::expm1(-std::log(s) / a);
    case BaselineKind::inverse_kumaraswamy:
      return std::expm1(-log1mexp(std::log1p(-s) / b) / a);
    case BaselineKind::exponential:
      return -std::log(s) / a;
  }
  return 0.0;
}

}  // namespace pgdus
