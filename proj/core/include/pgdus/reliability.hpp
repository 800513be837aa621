#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "pgdus/estimation.hpp"
#include "pgdus/params.hpp"
#include "pgdus/sample.hpp"

namespace pgdus {

// At least c of k strength components exceed the common stress.
struct MultiComponentSpec {
  int c = 1;
  int k = 1;

  // Throws ParameterError unless 1 <= c <= k <= kMaxComponents.
  void validate() const;
};

inline constexpr int kMaxComponents = 30;

struct TwoSample {
  Sample strength;  // size N, exponent gamma1
  Sample stress;    // size M, exponent gamma2

  // Throws SampleError if either sample is empty.
  void validate() const;
};

// P(stress < strength) = gamma1 / (gamma1 + gamma2). DomainError unless both
// exponents are finite and positive.
double r_single(double gamma1, double gamma2);

// R_{c,k} = sum_{l=c}^{k} C(k,l) rho B(l + 1, k - l + rho), rho = gamma2/gamma1:
// the integral behind the alternating double sum, summed over positive terms.
// Throws NumericalError if the result leaves [0, 1] by more than 1e-10.
double r_multi(const MultiComponentSpec& spec, double gamma1, double gamma2);

// The alternating double sum
// sum_l sum_p C(k,l) C(l,p) (-1)^p gamma2 / (gamma1 (k + p - l) + gamma2),
// compensated. Loses accuracy for large k; kept as a cross-check.
double r_multi_alternating(const MultiComponentSpec& spec, double gamma1, double gamma2);

// Joint log-likelihood: strength under gamma1 plus stress under gamma2, with
// the shared (lambda, theta).
double two_sample_loglik(const StressStrengthParams& p, const TwoSample& data);

// Sum of the mean log-spacings of the two samples.
double two_sample_log_ps(const StressStrengthParams& p, const TwoSample& data);

struct ReliabilityFit {
  StressStrengthParams params;
  Method method = Method::ml;
  double r_hat = 0.0;
  double objective = 0.0;
  bool converged = false;
  int iterations = 0;
  double curvature = 0.0;  // as FitResult::curvature
};

// Maximizes the joint objective over (lambda, theta, gamma1, gamma2) and
// returns R = gamma1/(gamma1 + gamma2). The two samples are put in a fixed
// canonical order before fitting, so exchanging them exchanges the exponents
// exactly. ML estimates satisfy the closed-form exponent equations at the
// fitted (lambda, theta). Requires N, M >= 2 and N + M >= 5.
ReliabilityFit estimate_r(const TwoSample& data, Method method, const FitOptions& opts = {});
ReliabilityFit estimate_r_mle(const TwoSample& data, const FitOptions& opts = {});
ReliabilityFit estimate_r_mps(const TwoSample& data, const FitOptions& opts = {});

// Multi-component version: k strength samples of common size N and one stress
// sample of size N. The Nk strength observations are pooled, then fitted as
// in estimate_r; r_hat is R_{c,k} at the fitted exponents. Throws SampleError
// on a shape mismatch.
ReliabilityFit estimate_rck(const std::vector<Sample>& strength, const Sample& stress,
                            const MultiComponentSpec& spec, Method method,
                            const FitOptions& opts = {});
ReliabilityFit estimate_rck_mle(const std::vector<Sample>& strength, const Sample& stress,
                                const MultiComponentSpec& spec, const FitOptions& opts = {});
ReliabilityFit estimate_rck_mps(const std::vector<Sample>& strength, const Sample& stress,
                                const MultiComponentSpec& spec, const FitOptions& opts = {});

// Brute-force frequency of the reliability event over n_draws simulated
// systems (one strength and one stress draw, or k strengths and one stress).
// Draws come in fixed chunks with seeds derive_seed(seed, {chunk}), so the
// result does not depend on the thread count.
double mc_oracle_r(const StressStrengthParams& p, const std::optional<MultiComponentSpec>& spec,
                   std::size_t n_draws, std::uint64_t seed);

}  // namespace pgdus
