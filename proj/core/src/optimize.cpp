#include "pgdus/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace pgdus {

namespace {

double clean(double v) {
  return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
}

}  // namespace

NelderMeadResult nelder_mead(const Objective& f, std::span<const double> start,
                             const NelderMeadOptions& opts) {
  const std::size_t dim = start.size();
  std::vector<std::vector<double>> simplex(dim + 1, std::vector<double>(start.begin(), start.end()));
  for (std::size_t i = 0; i < dim; ++i) simplex[i + 1][i] += opts.initial_step;

  std::vector<double> values(dim + 1);
  for (std::size_t i = 0; i <= dim; ++i) values[i] = clean(f(simplex[i]));

  std::vector<std::size_t> order(dim + 1);
  std::vector<double> centroid(dim), trial(dim), trial2(dim);

  auto point_along = [&](double coeff, std::vector<double>& out) {
    const auto& worst = simplex[order[dim]];
    for (std::size_t j = 0; j < dim; ++j) out[j] = centroid[j] + coeff * (worst[j] - centroid[j]);
  };

  NelderMeadResult result;
  int iter = 0;
  for (; iter < opts.max_iterations; ++iter) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

    const auto& best = simplex[order[0]];
    double diameter = 0.0;
    for (std::size_t i = 1; i <= dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) {
        diameter = std::max(diameter, std::abs(simplex[order[i]][j] - best[j]));
      }
    }
    if (diameter < opts.tolerance && std::isfinite(values[order[0]])) {
      result.converged = true;
      break;
    }

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) centroid[j] += simplex[order[i]][j];
    }
    for (double& c : centroid) c /= static_cast<double>(dim);

    const std::size_t worst = order[dim];
    const double f_best = values[order[0]];
    const double f_second = values[order[dim - 1]];
    const double f_worst = values[worst];

    point_along(-1.0, trial);  // reflection
    const double f_reflect = clean(f(trial));

    if (f_reflect < f_best) {
      point_along(-2.0, trial2);  // expansion
      const double f_expand = clean(f(trial2));
      if (f_expand < f_reflect) {
        simplex[worst] = trial2;
        values[worst] = f_expand;
      } else {
        simplex[worst] = trial;
        values[worst] = f_reflect;
      }
      continue;
    }
    if (f_reflect < f_second) {
      simplex[worst] = trial;
      values[worst] = f_reflect;
      continue;
    }
    // Contraction, outside or inside depending on the reflected value.
    const bool outside = f_reflect < f_worst;
    point_along(outside ? -0.5 : 0.5, trial2);
    const double f_contract = clean(f(trial2));
    if (f_contract < (outside ? f_reflect : f_worst)) {
      simplex[worst] = trial2;
      values[worst] = f_contract;
      continue;
    }
    // Shrink toward the best vertex.
    const std::vector<double> anchor = simplex[order[0]];
    for (std::size_t i = 1; i <= dim; ++i) {
      auto& v = simplex[order[i]];
      for (std::size_t j = 0; j < dim; ++j) v[j] = anchor[j] + 0.5 * (v[j] - anchor[j]);
      values[order[i]] = clean(f(v));
    }
  }

  const auto best_it = std::min_element(values.begin(), values.end());
  const auto best_index = static_cast<std::size_t>(best_it - values.begin());
  result.x = simplex[best_index];
  result.value = *best_it;
  result.iterations = iter;
  return result;
}

double min_symmetric_eigenvalue(std::vector<double> a, std::size_t dim) {
  if (a.size() != dim * dim || dim == 0) return std::numeric_limits<double>::quiet_NaN();
  for (double v : a) {
    if (!std::isfinite(v)) return std::numeric_limits<double>::quiet_NaN();
  }
  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * dim + j]; };
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0, diag = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
      diag += at(i, i) * at(i, i);
      for (std::size_t j = i + 1; j < dim; ++j) off += at(i, j) * at(i, j);
    }
    if (off <= 1e-30 * diag || off == 0.0) break;
    for (std::size_t p = 0; p < dim; ++p) {
      for (std::size_t q = p + 1; q < dim; ++q) {
        if (at(p, q) == 0.0) continue;
        const double tau = (at(q, q) - at(p, p)) / (2.0 * at(p, q));
        const double t = std::copysign(1.0, tau) / (std::abs(tau) + std::hypot(1.0, tau));
        const double c = 1.0 / std::hypot(1.0, t);
        const double s = t * c;
        for (std::size_t k = 0; k < dim; ++k) {
          const double akp = at(k, p), akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < dim; ++k) {
          const double apk = at(p, k), aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  double lowest = at(0, 0);
  for (std::size_t i = 1; i < dim; ++i) lowest = std::min(lowest, at(i, i));
  return lowest;
}

double golden_section_maximize(const std::function<double(double)>& f, double lo, double hi,
                               double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (std::abs(b - a) > tol * (std::abs(c) + std::abs(d))) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace pgdus
