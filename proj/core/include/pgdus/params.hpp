#pragma once

namespace pgdus {

// PGDUS-IW(lambda, theta, gamma): inverse Weibull shape and scale, and the
// PGDUS exponent.
struct Params {
  double lambda = 1.0;
  double theta = 1.0;
  double gamma = 1.0;

  // Throws ParameterError unless all three are finite and strictly positive.
  void validate() const;

  friend bool operator==(const Params&, const Params&) = default;
};

// Stress-strength system with shared (lambda, theta): strength ~ gamma1,
// stress ~ gamma2.
struct StressStrengthParams {
  double lambda = 1.0;
  double theta = 1.0;
  double gamma1 = 1.0;
  double gamma2 = 1.0;

  void validate() const;
  Params strength() const { return {lambda, theta, gamma1}; }
  Params stress() const { return {lambda, theta, gamma2}; }
};

}  // namespace pgdus
