#include "pgdus/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <vector>

#include "pgdus/error.hpp"

namespace pgdus {

namespace {

// Kronrod abscissae; odd indices are the 7-point Gauss nodes.
constexpr std::array<double, 8> kXgk{
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk{
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg{
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a;
  double b;
  double value;
  double error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

Segment gk15(const Integrand& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double sum = f(center - dx) + f(center + dx);
    kronrod += kWgk[j] * sum;
    if (j % 2 == 1) gauss += kWg[j / 2] * sum;
  }
  kronrod *= half;
  gauss *= half;
  double err = std::abs(kronrod - gauss);
  if (!std::isfinite(kronrod)) err = std::numeric_limits<double>::infinity();
  return {a, b, kronrod, err};
}

}  // namespace

QuadratureResult integrate(const Integrand& f, double a, double b, const QuadratureOptions& opts) {
  if (!std::isfinite(a) || !std::isfinite(b)) {
    throw DomainError("integrate requires finite limits");
  }
  QuadratureResult out;
  if (a == b) {
    out.converged = true;
    return out;
  }
  const double sign = a < b ? 1.0 : -1.0;
  if (a > b) std::swap(a, b);

  std::priority_queue<Segment> heap;
  heap.push(gk15(f, a, b));
  out.evaluations = 15;
  double value = heap.top().value;
  double error = heap.top().error;

  int subdivisions = 1;
  while (error > std::max(opts.abs_tol, opts.rel_tol * std::abs(value)) &&
         subdivisions < opts.max_subdivisions) {
    const Segment worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) break;  // interval exhausted
    heap.pop();
    const Segment left = gk15(f, worst.a, mid);
    const Segment right = gk15(f, mid, worst.b);
    out.evaluations += 30;
    heap.push(left);
    heap.push(right);
    ++subdivisions;
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
  }
  // Final totals summed afresh from the segments.
  value = 0.0;
  error = 0.0;
  while (!heap.empty()) {
    value += heap.top().value;
    error += heap.top().error;
    heap.pop();
  }
  out.value = sign * value;
  out.error = error;
  out.converged = error <= std::max(opts.abs_tol, opts.rel_tol * std::abs(value));
  return out;
}

QuadratureResult integrate_half_line(const Integrand& g, double lo, double hi,
                                     const QuadratureOptions& opts) {
  if (!(lo > 0.0) || !(hi > lo) || !std::isfinite(hi)) {
    throw DomainError("integrate_half_line requires 0 < lo < hi < inf");
  }
  constexpr double kLogMin = -700.0;
  constexpr double kLogMax = 700.0;
  constexpr double kNegligible = 1e-17;

  const Integrand h = [&g](double x) {
    const double t = std::exp(x);
    const double v = g(t);
    return v == 0.0 ? 0.0 : v * t;
  };

  const double xlo = std::max(std::log(lo), kLogMin);
  const double xhi = std::min(std::log(hi), kLogMax);
  QuadratureResult core = integrate(h, xlo, xhi, opts);

  double total = core.value;
  double error = core.error;
  int evaluations = core.evaluations;
  bool converged = core.converged;

  auto extend = [&](double start, double direction) {
    double x = start;
    double width = std::max(1.0, 0.25 * (xhi - xlo));
    int quiet = 0;
    while (quiet < 2) {
      double next = x + direction * width;
      next = std::clamp(next, kLogMin, kLogMax);
      if (next == x) break;
      const QuadratureResult chunk = integrate(h, std::min(x, next), std::max(x, next), opts);
      total += chunk.value;
      error += chunk.error;
      evaluations += chunk.evaluations;
      converged = converged && chunk.converged;
      quiet = std::abs(chunk.value) <= kNegligible * std::abs(total) ? quiet + 1 : 0;
      x = next;
      width *= 1.5;
    }
  };
  extend(xhi, 1.0);
  extend(xlo, -1.0);

  return {total, error, evaluations, converged};
}

}  // namespace pgdus
