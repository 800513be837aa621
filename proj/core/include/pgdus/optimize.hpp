#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace pgdus {

struct NelderMeadOptions {
  double initial_step = 0.25;  // simplex edge along each coordinate
  double tolerance = 1e-8;     // stop when every vertex is within this of the best (inf-norm)
  int max_iterations = 2000;
};

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

using Objective = std::function<double(std::span<const double>)>;

// Minimizes `f` from `start`. Non-finite objective values are treated as +inf,
// which lets callers encode constraints by returning NaN or inf.
NelderMeadResult nelder_mead(const Objective& f, std::span<const double> start,
                             const NelderMeadOptions& opts = {});

// Smallest eigenvalue of a symmetric dim x dim matrix stored row-major
// (cyclic Jacobi rotations; meant for the handful of dimensions used here).
double min_symmetric_eigenvalue(std::vector<double> a, std::size_t dim);

// Maximizes a scalar function on [lo, hi] by golden-section search.
double golden_section_maximize(const std::function<double(double)>& f, double lo, double hi,
                               double tol = 1e-12);

}  // namespace pgdus
