#pragma once

#include "pgdus/params.hpp"
#include "pgdus/quadrature.hpp"

namespace pgdus {

enum class MomentMethod {
  quadrature,  // integral of t^s f(t); canonical
  series,      // double series in (k, m); integer gamma only
};

// E[T^s]. Exists only for s < lambda (DomainError otherwise). The series
// method throws ParameterError for non-integer gamma.
double raw_moment(const Params& p, int s, MomentMethod method = MomentMethod::quadrature,
                  const QuadratureOptions& opts = {});

// (1/(1-delta)) ln of the integral of f^delta. Requires delta > 0, delta != 1,
// and delta (lambda + 1) > 1 for the integral to converge.
double renyi_entropy(const Params& p, double delta, const QuadratureOptions& opts = {});

// -1/2 of the integral of f^2; always negative.
double extropy(const Params& p, const QuadratureOptions& opts = {});

struct OrderStatSpec {
  int r = 1;  // rank, 1 = minimum
  int n = 1;  // sample size
  void validate() const;
};

// P(T_(r:n) <= t) as the binomial tail sum_{k=r}^{n} C(n,k) F^k (1-F)^(n-k).
double order_stat_cdf(const Params& p, OrderStatSpec spec, double t);

// n!/((r-1)!(n-r)!) f(t) F(t)^(r-1) (1 - F(t))^(n-r), evaluated in log space.
double order_stat_pdf(const Params& p, OrderStatSpec spec, double t);

// Mass-bulk bracket [Q(1e-10), Q(1 - 1e-10)] used as the starting range for
// every integral over the support.
struct SupportBracket {
  double lo;
  double hi;
};
SupportBracket support_bracket(const Params& p, double tail = 1e-10);

}  // namespace pgdus
