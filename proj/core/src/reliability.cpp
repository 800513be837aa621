#include "pgdus/reliability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "pgdus/distribution.hpp"
#include "pgdus/error.hpp"
#include "pgdus/numeric.hpp"
#include "pgdus/parallel.hpp"
#include "pgdus/rng.hpp"

namespace pgdus {

namespace {

void require_exponents(double gamma1, double gamma2) {
  if (!(gamma1 > 0.0) || !(gamma2 > 0.0) || !std::isfinite(gamma1) || !std::isfinite(gamma2)) {
    throw DomainError("reliability needs finite positive exponents");
  }
}

double log_choose(int n, int r) {
  return std::lgamma(n + 1.0) - std::lgamma(r + 1.0) - std::lgamma(n - r + 1.0);
}

double check_probability(double r) {
  if (!(r >= -1e-10 && r <= 1.0 + 1e-10)) {
    throw NumericalError("reliability sum left [0, 1]: " + std::to_string(r));
  }
  return r;
}

// Strict weak order on samples, used to put the two samples of a joint fit
// in a canonical order.
bool sample_less(const Sample& a, const Sample& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  const auto x = a.sorted();
  const auto y = b.sorted();
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

ReliabilityFit fit_joint(const Sample& first, const Sample& second, Method method,
                         const FitOptions& opts) {
  if (first.size() < 2 || second.size() < 2 || first.size() + second.size() < 5) {
    throw SampleError("joint fit needs N, M >= 2 and N + M >= 5");
  }
  std::vector<double> pooled(first.values().begin(), first.values().end());
  pooled.insert(pooled.end(), second.values().begin(), second.values().end());
  const std::vector<double> guess = initial_guess(Sample(pooled), BaselineKind::inverse_weibull);
  const std::vector<double> start =
      opts.init && opts.init->size() == 4 ? *opts.init : std::vector<double>{guess[0], guess[1], 1.0, 1.0};

  const IwLogLikelihood ll1(first), ll2(second);
  // The MPS objective averages within each block; curvature is judged on a
  // common observation-count scale so the stationary point is unchanged.
  const double mps_scale = static_cast<double>(std::min(first.size(), second.size()) + 1);
  std::function<double(std::span<const double>)> objective;
  if (method == Method::ml) {
    objective = [&](std::span<const double> x) { return ll1(x[0], x[1], x[2]) + ll2(x[0], x[1], x[3]); };
  } else {
    objective = [&](std::span<const double> x) {
      return log_product_spacings(Params{x[0], x[1], x[2]}, first) +
             log_product_spacings(Params{x[0], x[1], x[3]}, second);
    };
  }

  FitOptions search = opts;
  search.init.reset();
  PositiveSearchResult found = maximize_positive(objective, start, search);

  if (method == Method::ml && std::isfinite(found.value)) {
    try {
      std::vector<double> polished = found.x;
      polished[2] = profile_gamma_mle(found.x[0], found.x[1], first);
      polished[3] = profile_gamma_mle(found.x[0], found.x[1], second);
      const double value = objective(polished);
      const bool inside = std::all_of(polished.begin() + 2, polished.end(), [&](double g) {
        return g >= opts.lower_bound && g <= opts.upper_bound;
      });
      if (inside && value >= found.value - 1e-9 * std::max(1.0, std::abs(found.value))) {
        found.x = std::move(polished);
        found.value = value;
      }
    } catch (const SampleError&) {
      // keep the simplex estimate
    }
  }

  const double curvature =
      std::isfinite(found.value)
          ? log_space_curvature(
                [&](std::span<const double> x) {
                  if (method == Method::ml) return objective(x);
                  return mps_scale * objective(x);
                },
                found.x)
          : std::numeric_limits<double>::quiet_NaN();

  ReliabilityFit out;
  out.params = StressStrengthParams{found.x[0], found.x[1], found.x[2], found.x[3]};
  out.method = method;
  out.objective = found.value;
  out.iterations = found.iterations;
  out.curvature = curvature;
  out.converged = found.converged && curvature >= kMinCurvature;
  return out;
}

ReliabilityFit fit_canonical(const Sample& strength, const Sample& stress, Method method,
                             const FitOptions& opts) {
  if (!sample_less(stress, strength)) return fit_joint(strength, stress, method, opts);
  FitOptions swapped = opts;
  if (swapped.init && swapped.init->size() == 4) std::swap((*swapped.init)[2], (*swapped.init)[3]);
  ReliabilityFit fit = fit_joint(stress, strength, method, swapped);
  std::swap(fit.params.gamma1, fit.params.gamma2);
  return fit;
}

}  // namespace

void MultiComponentSpec::validate() const {
  if (c < 1 || k < c || k > kMaxComponents) {
    throw ParameterError("multi-component spec needs 1 <= c <= k <= " + std::to_string(kMaxComponents) +
                         " (got c=" + std::to_string(c) + ", k=" + std::to_string(k) + ")");
  }
}

void TwoSample::validate() const {
  if (strength.empty() || stress.empty()) throw SampleError("stress-strength data needs two nonempty samples");
}

double r_single(double gamma1, double gamma2) {
  require_exponents(gamma1, gamma2);
  // The larger share is the complement of the smaller, so that
  // r_single(a, b) + r_single(b, a) rounds to exactly 1.
  if (gamma1 <= gamma2) return gamma1 / (gamma1 + gamma2);
  return 1.0 - gamma2 / (gamma1 + gamma2);
}

double r_multi(const MultiComponentSpec& spec, double gamma1, double gamma2) {
  spec.validate();
  require_exponents(gamma1, gamma2);
  if (spec.c == 1 && spec.k == 1) return r_single(gamma1, gamma2);
  const double rho = gamma2 / gamma1;
  const int k = spec.k;
  CompensatedSum sum;
  for (int l = spec.c; l <= k; ++l) {
    // C(k,l) rho Gamma(l+1) Gamma(k-l+rho) / Gamma(k+1+rho)
    const double log_term = log_choose(k, l) + std::log(rho) + std::lgamma(l + 1.0) +
                            std::lgamma(k - l + rho) - std::lgamma(k + 1.0 + rho);
    sum.add(std::exp(log_term));
  }
  return check_probability(sum.value());
}

double r_multi_alternating(const MultiComponentSpec& spec, double gamma1, double gamma2) {
  spec.validate();
  require_exponents(gamma1, gamma2);
  CompensatedSum sum;
  for (int l = spec.c; l <= spec.k; ++l) {
    for (int p = 0; p <= l; ++p) {
      const double coefficient = std::exp(log_choose(spec.k, l) + log_choose(l, p));
      const double sign = p % 2 == 0 ? 1.0 : -1.0;
      sum.add(sign * std::round(coefficient) * gamma2 / (gamma1 * (spec.k + p - l) + gamma2));
    }
  }
  return check_probability(sum.value());
}

double two_sample_loglik(const StressStrengthParams& p, const TwoSample& data) {
  p.validate();
  data.validate();
  return log_likelihood(p.strength(), data.strength) + log_likelihood(p.stress(), data.stress);
}

double two_sample_log_ps(const StressStrengthParams& p, const TwoSample& data) {
  p.validate();
  data.validate();
  return log_product_spacings(p.strength(), data.strength) + log_product_spacings(p.stress(), data.stress);
}

ReliabilityFit estimate_r(const TwoSample& data, Method method, const FitOptions& opts) {
  data.validate();
  ReliabilityFit fit = fit_canonical(data.strength, data.stress, method, opts);
  fit.r_hat = r_single(fit.params.gamma1, fit.params.gamma2);
  return fit;
}

ReliabilityFit estimate_r_mle(const TwoSample& data, const FitOptions& opts) {
  return estimate_r(data, Method::ml, opts);
}

ReliabilityFit estimate_r_mps(const TwoSample& data, const FitOptions& opts) {
  return estimate_r(data, Method::mps, opts);
}

ReliabilityFit estimate_rck(const std::vector<Sample>& strength, const Sample& stress,
                            const MultiComponentSpec& spec, Method method, const FitOptions& opts) {
  spec.validate();
  if (strength.size() != static_cast<std::size_t>(spec.k)) {
    throw SampleError("expected " + std::to_string(spec.k) + " strength samples, got " +
                      std::to_string(strength.size()));
  }
  std::vector<double> pooled;
  for (const Sample& s : strength) {
    if (s.size() != stress.size()) {
      throw SampleError("every strength sample must have the stress sample's size " +
                        std::to_string(stress.size()));
    }
    pooled.insert(pooled.end(), s.values().begin(), s.values().end());
  }
  TwoSample data{Sample(std::move(pooled)), stress};
  data.validate();
  ReliabilityFit fit = fit_canonical(data.strength, data.stress, method, opts);
  fit.r_hat = r_multi(spec, fit.params.gamma1, fit.params.gamma2);
  return fit;
}

ReliabilityFit estimate_rck_mle(const std::vector<Sample>& strength, const Sample& stress,
                                const MultiComponentSpec& spec, const FitOptions& opts) {
  return estimate_rck(strength, stress, spec, Method::ml, opts);
}

ReliabilityFit estimate_rck_mps(const std::vector<Sample>& strength, const Sample& stress,
                                const MultiComponentSpec& spec, const FitOptions& opts) {
  return estimate_rck(strength, stress, spec, Method::mps, opts);
}

double mc_oracle_r(const StressStrengthParams& p, const std::optional<MultiComponentSpec>& spec,
                   std::size_t n_draws, std::uint64_t seed) {
  p.validate();
  if (spec) spec->validate();
  if (n_draws == 0) throw ParameterError("Monte Carlo oracle needs at least one draw");
  const int c = spec ? spec->c : 1;
  const int k = spec ? spec->k : 1;
  const Params strength = p.strength();
  const Params stress = p.stress();

  constexpr std::size_t kChunk = 1 << 16;
  const std::size_t chunks = (n_draws + kChunk - 1) / kChunk;
  std::vector<std::size_t> hits(chunks, 0);
  parallel_for(chunks, [&](std::size_t chunk) {
    Rng rng(derive_seed(seed, {chunk}));
    const std::size_t begin = chunk * kChunk;
    const std::size_t end = std::min(n_draws, begin + kChunk);
    std::size_t count = 0;
    for (std::size_t i = begin; i < end; ++i) {
      const double t2 = pgdusiw_quantile(stress, rng.uniform());
      int exceed = 0;
      for (int l = 0; l < k; ++l) exceed += pgdusiw_quantile(strength, rng.uniform()) > t2;
      count += exceed >= c;
    }
    hits[chunk] = count;
  });
  std::size_t total = 0;
  for (std::size_t h : hits) total += h;
  return static_cast<double>(total) / static_cast<double>(n_draws);
}

}  // namespace pgdus
