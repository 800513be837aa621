#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "pgdus/distribution.hpp"
#include "pgdus/optimize.hpp"
#include "pgdus/params.hpp"
#include "pgdus/sample.hpp"

namespace pgdus {

enum class Method { ml, mps };

std::string_view method_name(Method m);  // "ML" / "MPS"
Method parse_method(std::string_view name);

struct FitOptions {
  int starts = 5;             // heuristic start + (starts - 1) jittered restarts
  double jitter_sigma = 0.5;  // lognormal multiplicative jitter of restarts
  NelderMeadOptions simplex{0.25, 1e-8, 2000};
  double lower_bound = 1e-6;  // box on every natural-scale parameter
  double upper_bound = 1e6;
  std::uint64_t seed = 0x9d2c5680u;
  std::optional<std::vector<double>> init;  // packed natural-scale start
};

struct FitResult {
  PgdusModel model;
  Method method = Method::ml;
  double objective = 0.0;       // maximized log-likelihood or log-PS
  double log_likelihood = 0.0;  // log-likelihood at the estimate, either method
  bool converged = false;
  int iterations = 0;           // simplex iterations of the winning start
  std::size_t n = 0;
  double curvature = 0.0;       // smallest eigenvalue of -Hessian in log-parameters

  Params params() const { return model.iw_params(); }
};

// A search is only trusted off a one-decade margin inside the box, and where
// the objective bends downwards in every log-parameter direction by at least
// kMinCurvature. Fits sliding along a flat ridge fail the second test.
inline constexpr double kBoundMargin = 2.302585092994045684;  // ln 10
inline constexpr double kMinCurvature = 1e-3;

// Smallest eigenvalue of the negative Hessian of `objective` with respect to
// the logarithms of x, by central differences (step 1e-3).
double log_space_curvature(const std::function<double(std::span<const double>)>& objective,
                           std::span<const double> x);

// Result of a bounded multi-start simplex search over positive parameters.
struct PositiveSearchResult {
  std::vector<double> x;  // natural scale
  double value = 0.0;     // maximized objective
  int iterations = 0;
  bool converged = false;
};

// Maximizes `objective` over strictly positive vectors by Nelder-Mead on the
// logarithms, from `start` and opts.starts - 1 jittered copies of it. A run
// counts as converged when the simplex collapses below the tolerance at a
// finite value and the point keeps kBoundMargin away from the box.
PositiveSearchResult maximize_positive(const std::function<double(std::span<const double>)>& objective,
                                       std::span<const double> start, const FitOptions& opts);

// ---------------------------------------------------------------------------
// Maximum likelihood

double log_likelihood(const Params& p, const Sample& s);
double log_likelihood(const PgdusModel& m, const Sample& s);

// PGDUS-IW log-likelihood of a fixed sample with ln t cached, for repeated
// evaluation inside optimizers. No parameter validation.
class IwLogLikelihood {
 public:
  explicit IwLogLikelihood(const Sample& s);
  double operator()(double lambda, double theta, double gamma) const;

 private:
  std::vector<double> log_t_;
};

// Closed-form maximizer of the likelihood in gamma with the baseline fixed:
// n / sum_i -ln[(e^{F(t_i)} - 1)/(e - 1)]. Throws SampleError when the
// denominator vanishes at floating precision.
double profile_gamma(const Baseline& base, const Sample& s);
double profile_gamma_mle(double lambda, double theta, const Sample& s);

FitResult fit_mle(const Sample& s, const FitOptions& opts = {});

// ---------------------------------------------------------------------------
// Maximum product of spacings

// The n + 1 spacings of the ordered sample, including F(t_(1)) and
// 1 - F(t_(n)). A tied pair contributes the density at the tied point.
std::vector<double> spacings(const PgdusModel& m, const Sample& s);

// Mean log-spacing, (n+1)^-1 sum ln S_i. Requires n >= 2.
double log_product_spacings(const Params& p, const Sample& s);
double log_product_spacings(const PgdusModel& m, const Sample& s);

FitResult fit_mps(const Sample& s, const FitOptions& opts = {});

// ---------------------------------------------------------------------------
// Any supported PGDUS model

// Data-driven starting point, packed (baseline params..., gamma).
std::vector<double> initial_guess(const Sample& s, BaselineKind kind);

FitResult fit_model(const Sample& s, BaselineKind kind, Method method, const FitOptions& opts = {});

// PGDUS-W, PGDUS-L, PGDUS-IK, PGDUS-E fits; same contract as fit_mle/fit_mps.
FitResult fit_competitor(const Sample& s, BaselineKind kind, Method method,
                         const FitOptions& opts = {});

}  // namespace pgdus
