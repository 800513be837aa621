#pragma once

#include <functional>

namespace pgdus {

struct QuadratureOptions {
  double abs_tol = 1e-14;
  double rel_tol = 1e-12;
  int max_subdivisions = 2000;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;       // estimated absolute error
  int evaluations = 0;
  bool converged = false;   // error target met within the subdivision budget
};

using Integrand = std::function<double(double)>;

// Globally adaptive 7/15-point Gauss-Kronrod on the finite interval [a, b].
QuadratureResult integrate(const Integrand& f, double a, double b,
                           const QuadratureOptions& opts = {});

// Integral of g over (0, inf) through t = e^x. [lo, hi] is the bulk of the
// mass (e.g. two extreme quantiles); the range is then extended outward in
// geometrically growing log-space chunks until the added contributions are
// negligible, so polynomial tails are captured rather than truncated.
QuadratureResult integrate_half_line(const Integrand& g, double lo, double hi,
                                     const QuadratureOptions& opts = {});

}  // namespace pgdus
