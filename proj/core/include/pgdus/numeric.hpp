#pragma once

#include <cmath>
#include <limits>
#include <numbers>

namespace pgdus {

inline constexpr double kInf = std::numeric_limits<double>::infinity();
inline constexpr double kE = std::numbers::e;
// ln(e - 1)
inline constexpr double kLogEm1 = 0.54132485461291810898;

// ln(exp(exp(x)) - 1), finite for any finite x even when exp(x) underflows.
inline double log_expm1_exp(double x) {
  if (x < -700.0) {
    return x;
  }
  return std::log(std::expm1(std::exp(x)));
}

// ln[(e^F - 1)/(e - 1)] for a baseline with log-CDF `log_cdf` and survival `sf`.
// Uses whichever of the two is accurate: the survival route near F = 1,
// the log-CDF route elsewhere.
inline double log_dus_ratio(double log_cdf, double sf) {
  if (sf < 0.5) {
    return std::log1p(kE * std::expm1(-sf) / (kE - 1.0));
  }
  return log_expm1_exp(log_cdf) - kLogEm1;
}

// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace pgdus

namespace pgdus {

// ln(1 - e^x) for x <= 0.
inline double log1mexp(double x) {
  if (x > -0.6931471805599453) {
    return std::log(-std::expm1(x));
  }
  return std::log1p(-std::exp(x));
}

}  // namespace pgdus
