#include "pgdus/estimation.hpp"

#include <algorithm>
#include <cctype>
#include <cfloat>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "pgdus/error.hpp"
#include "pgdus/numeric.hpp"
#include "pgdus/rng.hpp"

namespace pgdus {

namespace {

constexpr std::size_t kMinFitSize = 4;
constexpr int kMaxSimplexRestarts = 5;

void require_nonempty(const Sample& s) {
  if (s.empty()) throw SampleError("sample is empty");
}

void require_fit_size(const Sample& s) {
  if (s.size() < kMinFitSize) {
    throw SampleError("fitting three parameters needs at least 4 observations, got " +
                      std::to_string(s.size()));
  }
}

// ln F and ln(1 - F) together.
struct LogCdfPair {
  double log_cdf;
  double log_sf;
};

LogCdfPair log_cdf_pair(const PgdusModel& m, double t) {
  const double lc = m.log_cdf(t);
  return {lc, lc == -kInf ? 0.0 : log1mexp(lc)};
}

// Sum of ln f(t_i) for PGDUS-IW from precomputed ln t_i.
double iw_log_likelihood(double lambda, double theta, double gamma, std::span<const double> log_t) {
  const double log_theta = std::log(theta);
  const double constant = std::log(gamma) + std::log(lambda) - kLogEm1;
  double total = 0.0;
  for (double lt : log_t) {
    const double log_z = -lambda * (lt - log_theta);
    const double z = std::exp(log_z);
    if (std::isinf(z)) return -kInf;
    double term = constant - lt + log_z - z + std::exp(-z);
    if (gamma != 1.0) term += (gamma - 1.0) * log_dus_ratio(-z, -std::expm1(-z));
    total += term;
  }
  return total;
}

double mean_log_spacing(const PgdusModel& m, std::span<const double> sorted) {
  const std::size_t n = sorted.size();
  std::vector<LogCdfPair> logs(n);
  for (std::size_t i = 0; i < n; ++i) logs[i] = log_cdf_pair(m, sorted[i]);
  constexpr double kLogHalf = -0.6931471805599453;
  double total = logs.front().log_cdf + logs.back().log_sf;
  for (std::size_t i = 1; i < n; ++i) {
    double log_spacing = 0.0;
    if (sorted[i] == sorted[i - 1]) {
      log_spacing = m.log_pdf(sorted[i]);
    } else if (logs[i].log_cdf <= kLogHalf) {
      log_spacing = logs[i].log_cdf + log1mexp(logs[i - 1].log_cdf - logs[i].log_cdf);
    } else {
      log_spacing = logs[i - 1].log_sf + log1mexp(logs[i].log_sf - logs[i - 1].log_sf);
    }
    total += log_spacing;
  }
  return total / static_cast<double>(n + 1);
}

// Sample standard deviation of f(x) over the observations.
template <class F>
double transformed_sd(const Sample& s, F f) {
  double mean = 0.0;
  for (double v : s.values()) mean += f(v);
  mean /= static_cast<double>(s.size());
  double ss = 0.0;
  for (double v : s.values()) ss += (f(v) - mean) * (f(v) - mean);
  return std::sqrt(ss / static_cast<double>(s.size() - 1));
}

double sample_log_sd(const Sample& s) {
  return transformed_sd(s, [](double v) { return std::log(v); });
}

}  // namespace

std::string_view method_name(Method m) { return m == Method::ml ? "ML" : "MPS"; }

Method parse_method(std::string_view name) {
  std::string s(name);
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (s == "ml" || s == "mle") return Method::ml;
  if (s == "mps" || s == "mpse") return Method::mps;
  throw ParameterError("unknown estimation method '" + std::string(name) + "'");
}

double log_space_curvature(const std::function<double(std::span<const double>)>& objective,
                           std::span<const double> x) {
  const std::size_t dim = x.size();
  const double h = 1e-3;
  std::vector<double> log_x(dim), point(dim);
  for (std::size_t j = 0; j < dim; ++j) log_x[j] = std::log(x[j]);
  auto eval = [&](std::size_t i, double di, std::size_t j, double dj) {
    for (std::size_t k = 0; k < dim; ++k) {
      double v = log_x[k];
      if (k == i) v += di;
      if (k == j) v += dj;
      point[k] = std::exp(v);
    }
    return objective(point);
  };
  std::vector<double> neg_hessian(dim * dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i; j < dim; ++j) {
      const double d = (eval(i, h, j, h) - eval(i, h, j, -h) - eval(i, -h, j, h) + eval(i, -h, j, -h)) /
                       (4.0 * h * h);
      neg_hessian[i * dim + j] = neg_hessian[j * dim + i] = -d;
    }
  }
  return min_symmetric_eigenvalue(std::move(neg_hessian), dim);
}

PositiveSearchResult maximize_positive(const std::function<double(std::span<const double>)>& objective,
                                       std::span<const double> start, const FitOptions& opts) {
  const std::size_t dim = start.size();
  const double log_lo = std::log(opts.lower_bound);
  const double log_hi = std::log(opts.upper_bound);
  std::vector<double> natural(dim);

  const Objective negated = [&](std::span<const double> x) {
    for (std::size_t j = 0; j < dim; ++j) {
      if (!(x[j] >= log_lo && x[j] <= log_hi)) return kInf;
      natural[j] = std::exp(x[j]);
    }
    return -objective(natural);
  };

  std::vector<double> base(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    if (!(start[j] > 0.0) || !std::isfinite(start[j])) {
      throw ParameterError("starting values must be finite and > 0");
    }
    base[j] = std::clamp(std::log(start[j]), log_lo, log_hi);
  }

  Rng jitter(opts.seed);
  NelderMeadResult best;
  best.value = kInf;
  bool have_best = false;
  for (int run = 0; run < std::max(1, opts.starts); ++run) {
    std::vector<double> x0 = base;
    if (run > 0) {
      for (double& v : x0) v = std::clamp(v + opts.jitter_sigma * jitter.normal(), log_lo, log_hi);
    }
    NelderMeadResult r = nelder_mead(negated, x0, opts.simplex);
    if (!have_best || r.value < best.value) {
      best = std::move(r);
      have_best = true;
    }
  }

  // A collapsed simplex can stall on a flat ridge short of the maximum;
  // restart from the winner until a fresh simplex no longer improves it.
  for (int restart = 0; restart < kMaxSimplexRestarts && std::isfinite(best.value); ++restart) {
    NelderMeadResult r = nelder_mead(negated, best.x, opts.simplex);
    const bool improved = r.value < best.value - 1e-10 * std::max(1.0, std::abs(best.value));
    if (r.value <= best.value) {
      r.iterations += best.iterations;
      best = std::move(r);
    }
    if (!improved) break;
  }

  PositiveSearchResult out;
  out.x.resize(dim);
  bool interior = true;
  for (std::size_t j = 0; j < dim; ++j) {
    out.x[j] = std::exp(best.x[j]);
    interior = interior && best.x[j] > log_lo + kBoundMargin && best.x[j] < log_hi - kBoundMargin;
  }
  out.value = -best.value;
  out.iterations = best.iterations;
  out.converged = best.converged && std::isfinite(out.value) && interior;
  return out;
}

// ---------------------------------------------------------------------------

double log_likelihood(const Params& p, const Sample& s) {
  require_nonempty(s);
  p.validate();
  double total = 0.0;
  for (double t : s.values()) total += pgdusiw_log_pdf(p, t);
  return total;
}

double log_likelihood(const PgdusModel& m, const Sample& s) {
  require_nonempty(s);
  double total = 0.0;
  for (double t : s.values()) total += m.log_pdf(t);
  return total;
}

IwLogLikelihood::IwLogLikelihood(const Sample& s) {
  log_t_.reserve(s.size());
  for (double t : s.values()) log_t_.push_back(std::log(t));
}

double IwLogLikelihood::operator()(double lambda, double theta, double gamma) const {
  return iw_log_likelihood(lambda, theta, gamma, log_t_);
}

double profile_gamma(const Baseline& base, const Sample& s) {
  require_nonempty(s);
  const auto n = static_cast<double>(s.size());
  CompensatedSum denominator;  // n ln(e-1) - sum ln(e^F - 1), summed termwise
  for (double t : s.values()) {
    const BaselineEval e = base.evaluate(t);
    denominator.add(-log_dus_ratio(e.log_cdf, e.sf));
  }
  const double d = denominator.value();
  if (!(d > n * kLogEm1 * DBL_EPSILON) || !std::isfinite(d)) {
    throw SampleError("degenerate sample: closed-form gamma estimator has a vanishing denominator");
  }
  return n / d;
}

double profile_gamma_mle(double lambda, double theta, const Sample& s) {
  return profile_gamma(Baseline::inverse_weibull(lambda, theta), s);
}

std::vector<double> spacings(const PgdusModel& m, const Sample& s) {
  if (s.size() < 2) throw SampleError("spacings need at least 2 observations");
  const auto sorted = s.sorted();
  const std::size_t n = sorted.size();
  std::vector<double> out(n + 1);
  out[0] = m.cdf(sorted[0]);
  for (std::size_t i = 1; i < n; ++i) {
    if (sorted[i] == sorted[i - 1]) {
      out[i] = m.pdf(sorted[i]);
    } else if (m.cdf(sorted[i]) <= 0.5) {
      out[i] = m.cdf(sorted[i]) - m.cdf(sorted[i - 1]);
    } else {
      out[i] = m.sf(sorted[i - 1]) - m.sf(sorted[i]);
    }
  }
  out[n] = m.sf(sorted[n - 1]);
  return out;
}

double log_product_spacings(const PgdusModel& m, const Sample& s) {
  if (s.size() < 2) throw SampleError("log product of spacings needs at least 2 observations");
  return mean_log_spacing(m, s.sorted());
}

double log_product_spacings(const Params& p, const Sample& s) {
  p.validate();
  return log_product_spacings(PgdusModel(p), s);
}

std::vector<double> initial_guess(const Sample& s, BaselineKind kind) {
  require_nonempty(s);
  const double median = s.median();
  const double log_sd = s.size() > 1 ? sample_log_sd(s) : 0.0;
  if (!(log_sd > 0.0)) {
    throw SampleError("degenerate sample: all observations are identical");
  }
  // Log of an (inverse) Weibull variable is Gumbel with sd pi / (shape sqrt 6).
  const double gumbel_shape = std::numbers::pi / (std::sqrt(6.0) * log_sd);
  switch (kind) {
    case BaselineKind::inverse_weibull:
      return {gumbel_shape, median, 1.0};
    case BaselineKind::weibull:
      return {gumbel_shape, median, 1.0};
    case BaselineKind::lomax:
      return {2.0, median / (std::sqrt(2.0) - 1.0), 1.0};
    case BaselineKind::inverse_kumaraswamy: {
      // For large beta, (1 - x^-alpha)^beta ~ exp(-beta x^-alpha) with x = 1 + t:
      // an inverse Weibull in 1 + t.
      const double sd = transformed_sd(s, [](double v) { return std::log1p(v); });
      const double alpha = std::numbers::pi / (std::sqrt(6.0) * sd);
      return {alpha, std::log(2.0) * std::exp(alpha * std::log1p(median)), 1.0};
    }
    case BaselineKind::exponential:
      return {std::log(2.0) / median, 1.0};
  }
  return {};
}

namespace {

// Best point of a coarse log grid of baseline parameters around `start`, with
// gamma at its closed-form likelihood maximizer. Second start for searches
// that stalled, e.g. when the likelihood has a mode at the gamma bound.
std::vector<double> scanned_start(const std::function<double(std::span<const double>)>& objective,
                                  BaselineKind kind, const Sample& s, std::vector<double> start,
                                  const FitOptions& opts) {
  constexpr int kHalfWidth = 3;
  constexpr double kStep = 2.0;
  const std::size_t dim = start.size() - 1;
  std::vector<double> best = start;
  double best_value = objective(start);
  std::vector<int> offset(dim, -kHalfWidth);
  std::vector<double> x(start.size());
  for (;;) {
    bool inside = true;
    for (std::size_t j = 0; j < dim; ++j) {
      x[j] = start[j] * std::exp(kStep * offset[j]);
      inside = inside && x[j] >= opts.lower_bound && x[j] <= opts.upper_bound;
    }
    if (inside) {
      try {
        x.back() = std::clamp(profile_gamma(Baseline(kind, std::span<const double>(x).first(dim)), s),
                              opts.lower_bound, opts.upper_bound);
        const double value = objective(x);
        if (value > best_value) {
          best_value = value;
          best = x;
        }
      } catch (const std::exception&) {
        // unusable grid point
      }
    }
    std::size_t j = 0;
    while (j < dim && offset[j] == kHalfWidth) offset[j++] = -kHalfWidth;
    if (j == dim) break;
    ++offset[j];
  }
  return best;
}

}  // namespace

FitResult fit_model(const Sample& input, BaselineKind kind, Method method, const FitOptions& opts) {
  require_fit_size(input);
  // sorted once so every sum runs in the same order for any permutation
  const Sample s(std::vector<double>(input.sorted().begin(), input.sorted().end()), input.label());
  const std::vector<double> start = opts.init ? *opts.init : initial_guess(s, kind);
  if (start.size() != param_count(kind) + 1) {
    throw ParameterError("initial value has the wrong number of parameters for " + model_name(kind));
  }

  const IwLogLikelihood iw_loglik(s);
  std::function<double(std::span<const double>)> objective;
  if (method == Method::ml && kind == BaselineKind::inverse_weibull) {
    objective = [&iw_loglik](std::span<const double> x) { return iw_loglik(x[0], x[1], x[2]); };
  } else if (method == Method::ml) {
    objective = [&s, kind](std::span<const double> x) {
      return log_likelihood(PgdusModel(kind, x), s);
    };
  } else {
    objective = [&s, kind](std::span<const double> x) {
      return mean_log_spacing(PgdusModel(kind, x), s.sorted());
    };
  }

  PositiveSearchResult found = maximize_positive(objective, start, opts);
  if (!found.converged && !opts.init) {
    PositiveSearchResult retry = maximize_positive(objective, scanned_start(objective, kind, s, start, opts), opts);
    if (retry.value > found.value || !std::isfinite(found.value)) {
      retry.iterations += found.iterations;
      found = std::move(retry);
    } else {
      found.iterations += retry.iterations;
    }
  }

  if (method == Method::ml && std::isfinite(found.value)) {
    // Snap gamma onto its closed-form maximizer at the fitted baseline. That
    // maximizer can only raise the objective; the slack absorbs rounding.
    try {
      std::vector<double> polished = found.x;
      const Baseline base(kind, std::span<const double>(polished).first(polished.size() - 1));
      polished.back() = profile_gamma(base, s);
      const double value = objective(polished);
      if (polished.back() >= opts.lower_bound && polished.back() <= opts.upper_bound &&
          value >= found.value - 1e-9 * std::max(1.0, std::abs(found.value))) {
        found.x = std::move(polished);
        found.value = value;
      }
    } catch (const SampleError&) {
      // leave the simplex estimate as is
    }
  }

  // Curvature of the total objective: the log-likelihood, or (n + 1) times the
  // mean log-spacing, so both methods share one threshold.
  const double scale = method == Method::ml ? 1.0 : static_cast<double>(s.size() + 1);
  const double curvature =
      std::isfinite(found.value)
          ? log_space_curvature([&](std::span<const double> x) { return scale * objective(x); }, found.x)
          : std::numeric_limits<double>::quiet_NaN();

  PgdusModel model(kind, found.x);
  FitResult out{model, method, found.value, 0.0, false, found.iterations, s.size(), curvature};
  out.log_likelihood = method == Method::ml ? found.value : log_likelihood(model, s);
  out.converged = found.converged && curvature >= kMinCurvature;
  return out;
}

FitResult fit_mle(const Sample& s, const FitOptions& opts) {
  return fit_model(s, BaselineKind::inverse_weibull, Method::ml, opts);
}

FitResult fit_mps(const Sample& s, const FitOptions& opts) {
  return fit_model(s, BaselineKind::inverse_weibull, Method::mps, opts);
}

FitResult fit_competitor(const Sample& s, BaselineKind kind, Method method, const FitOptions& opts) {
  return fit_model(s, kind, method, opts);
}

}  // namespace pgdus
