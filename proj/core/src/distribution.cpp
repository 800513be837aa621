#include "pgdus/distribution.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "pgdus/error.hpp"
#include "pgdus/numeric.hpp"
#include "pgdus/rng.hpp"
#include "pgdus/sample.hpp"

namespace pgdus {

namespace {

void check_gamma(double gamma) {
  if (!std::isfinite(gamma) || gamma <= 0.0) {
    throw ParameterError("gamma must be finite and > 0");
  }
}

void check_prob(double prob) {
  if (!(prob > 0.0 && prob < 1.0)) {
    throw DomainError("probability must lie strictly between 0 and 1");
  }
}

// ln u where u = ln(1 + (e-1) v) and ln v = log_v, v in (0, 1]. Used by the
// lower-half quantile path.
double log_dus_inverse(double log_v) {
  if (log_v < -600.0) {
    return kLogEm1 + log_v;
  }
  return std::log(std::log1p((kE - 1.0) * std::exp(log_v)));
}

// 1 - u for u = ln(1 + (e-1) p^{1/gamma}), given the upper tail q = 1 - p.
double dus_inverse_tail(double q, double gamma) {
  const double w = (kE - 1.0) * -std::expm1(std::log1p(-q) / gamma);
  return -std::log1p(-w / kE);
}

// z = (t/theta)^-lambda
double iw_z(const Params& p, double t) {
  return std::exp(-p.lambda * (std::log(t) - std::log(p.theta)));
}

double iw_log_ratio(double z) {
  return log_dus_ratio(-z, -std::expm1(-z));
}

double t_from_z(const Params& p, double z) {
  return p.theta * std::exp(-std::log(z) / p.lambda);
}

}  // namespace

void Params::validate() const {
  if (!std::isfinite(lambda) || lambda <= 0.0) throw ParameterError("lambda must be finite and > 0");
  if (!std::isfinite(theta) || theta <= 0.0) throw ParameterError("theta must be finite and > 0");
  if (!std::isfinite(gamma) || gamma <= 0.0) throw ParameterError("gamma must be finite and > 0");
}

void StressStrengthParams::validate() const {
  strength().validate();
  stress().validate();
}

// ---------------------------------------------------------------------------
// Generic transform

double pgdus_cdf(const Baseline& base, double gamma, double t) {
  check_gamma(gamma);
  if (!(t > 0.0)) return 0.0;
  if (std::isinf(t)) return 1.0;
  const BaselineEval e = base.evaluate(t);
  return std::exp(gamma * log_dus_ratio(e.log_cdf, e.sf));
}

double pgdus_sf(const Baseline& base, double gamma, double t) {
  check_gamma(gamma);
  if (!(t > 0.0)) return 1.0;
  if (std::isinf(t)) return 0.0;
  const BaselineEval e = base.evaluate(t);
  return -std::expm1(gamma * log_dus_ratio(e.log_cdf, e.sf));
}

double pgdus_log_pdf(const Baseline& base, double gamma, double t) {
  check_gamma(gamma);
  if (!(t > 0.0) || std::isinf(t)) return -kInf;
  const BaselineEval e = base.evaluate(t);
  if (e.log_pdf == -kInf) return -kInf;
  double out = std::log(gamma) + e.log_pdf + std::exp(e.log_cdf) - kLogEm1;
  if (gamma != 1.0) {
    out += (gamma - 1.0) * log_dus_ratio(e.log_cdf, e.sf);
  }
  return out;
}

double pgdus_pdf(const Baseline& base, double gamma, double t) {
  return std::exp(pgdus_log_pdf(base, gamma, t));
}

double pgdus_hazard(const Baseline& base, double gamma, double t) {
  check_gamma(gamma);
  if (!(t > 0.0)) return 0.0;
  const double sf = pgdus_sf(base, gamma, t);
  if (sf <= 0.0) return kInf;
  return std::exp(pgdus_log_pdf(base, gamma, t) - std::log(sf));
}

double pgdus_quantile(const Baseline& base, double gamma, double prob) {
  check_gamma(gamma);
  check_prob(prob);
  if (prob <= 0.5) {
    return base.quantile_log(log_dus_inverse(std::log(prob) / gamma));
  }
  const double s = dus_inverse_tail(1.0 - prob, gamma);
  // a small gamma can leave the baseline probability tiny even for prob > 1/2
  if (s > 0.5) return base.quantile_log(log_dus_inverse(std::log(prob) / gamma));
  return base.quantile_sf(s);
}

// ---------------------------------------------------------------------------
// PGDUS-IW

double pgdusiw_log_dus_ratio(double lambda, double theta, double t) {
  if (!(t > 0.0)) return -kInf;
  return iw_log_ratio(std::exp(-lambda * (std::log(t) - std::log(theta))));
}

double pgdusiw_log_cdf(const Params& p, double t) {
  p.validate();
  if (!(t > 0.0)) return -kInf;
  if (std::isinf(t)) return 0.0;
  return p.gamma * iw_log_ratio(iw_z(p, t));
}

double pgdusiw_cdf(const Params& p, double t) {
  return std::exp(pgdusiw_log_cdf(p, t));
}

double pgdusiw_sf(const Params& p, double t) {
  p.validate();
  if (!(t > 0.0)) return 1.0;
  if (std::isinf(t)) return 0.0;
  return -std::expm1(p.gamma * iw_log_ratio(iw_z(p, t)));
}

double pgdusiw_log_sf(const Params& p, double t) {
  p.validate();
  if (!(t > 0.0)) return 0.0;
  if (std::isinf(t)) return -kInf;
  return log1mexp(p.gamma * iw_log_ratio(iw_z(p, t)));
}

double pgdusiw_log_pdf(const Params& p, double t) {
  p.validate();
  if (!(t > 0.0) || std::isinf(t)) return -kInf;
  const double z = iw_z(p, t);
  if (!(z > 0.0) || std::isinf(z)) return -kInf;
  // ln(gamma lambda theta^lambda t^-(lambda+1) e^-z e^{e^-z} (e^{e^-z}-1)^(gamma-1) / (e-1)^gamma)
  double out = std::log(p.gamma) + std::log(p.lambda) - std::log(t) + std::log(z) - z +
               std::exp(-z) - kLogEm1;
  if (p.gamma != 1.0) {
    out += (p.gamma - 1.0) * iw_log_ratio(z);
  }
  return out;
}

double pgdusiw_pdf(const Params& p, double t) {
  return std::exp(pgdusiw_log_pdf(p, t));
}

double pgdusiw_hazard(const Params& p, double t) {
  if (!(t > 0.0)) return 0.0;
  const double log_sf = pgdusiw_log_sf(p, t);
  if (log_sf == -kInf) return kInf;
  return std::exp(pgdusiw_log_pdf(p, t) - log_sf);
}

double pgdusiw_quantile(const Params& p, double prob) {
  p.validate();
  check_prob(prob);
  if (prob > 0.5) {
    return pgdusiw_quantile_sf(p, 1.0 - prob);
  }
  const double log_u = log_dus_inverse(std::log(prob) / p.gamma);
  return t_from_z(p, -log_u);
}

double pgdusiw_quantile_sf(const Params& p, double tail) {
  p.validate();
  check_prob(tail);
  if (tail >= 0.5) {
    return pgdusiw_quantile(p, 1.0 - tail);
  }
  const double s = dus_inverse_tail(tail, p.gamma);
  if (s > 0.5) return t_from_z(p, -log_dus_inverse(std::log1p(-tail) / p.gamma));
  return t_from_z(p, -std::log1p(-s));
}

Sample sample(const Params& p, std::size_t n, std::uint64_t seed) {
  p.validate();
  if (n == 0) {
    throw SampleError("sample size must be at least 1");
  }
  Rng rng(seed);
  std::vector<double> out(n);
  for (double& x : out) x = pgdusiw_quantile(p, rng.uniform());
  return Sample(std::move(out), "pgdus-iw draw");
}

// ---------------------------------------------------------------------------
// PgdusModel

PgdusModel::PgdusModel(Baseline base, double gamma) : base_(base), gamma_(gamma) {
  check_gamma(gamma);
}

PgdusModel::PgdusModel(const Params& p)
    : base_(Baseline::inverse_weibull(p.lambda, p.theta)), gamma_(p.gamma) {
  check_gamma(p.gamma);
}

PgdusModel::PgdusModel(BaselineKind kind, std::span<const double> packed)
    : base_(kind, packed.empty() ? packed : packed.first(packed.size() - 1)),
      gamma_(packed.empty() ? 0.0 : packed.back()) {
  check_gamma(gamma_);
}

std::vector<double> PgdusModel::packed() const {
  std::vector<double> out(base_.params().begin(), base_.params().end());
  out.push_back(gamma_);
  return out;
}

Params PgdusModel::iw_params() const {
  if (kind() != BaselineKind::inverse_weibull) {
    throw ParameterError("model '" + name() + "' has no PGDUS-IW parameters");
  }
  return {base_.params()[0], base_.params()[1], gamma_};
}

std::string PgdusModel::name() const { return model_name(kind()); }

double PgdusModel::cdf(double t) const {
  return kind() == BaselineKind::inverse_weibull ? pgdusiw_cdf(iw_params(), t)
                                                 : pgdus_cdf(base_, gamma_, t);
}

double PgdusModel::log_cdf(double t) const {
  if (kind() == BaselineKind::inverse_weibull) return pgdusiw_log_cdf(iw_params(), t);
  if (!(t > 0.0)) return -kInf;
  if (std::isinf(t)) return 0.0;
  const BaselineEval e = base_.evaluate(t);
  return gamma_ * log_dus_ratio(e.log_cdf, e.sf);
}

double PgdusModel::sf(double t) const {
  return kind() == BaselineKind::inverse_weibull ? pgdusiw_sf(iw_params(), t)
                                                 : pgdus_sf(base_, gamma_, t);
}

double PgdusModel::log_sf(double t) const {
  if (kind() == BaselineKind::inverse_weibull) return pgdusiw_log_sf(iw_params(), t);
  const double lc = log_cdf(t);
  return lc == -kInf ? 0.0 : log1mexp(lc);
}

double PgdusModel::pdf(double t) const { return std::exp(log_pdf(t)); }

double PgdusModel::log_pdf(double t) const {
  return kind() == BaselineKind::inverse_weibull ? pgdusiw_log_pdf(iw_params(), t)
                                                 : pgdus_log_pdf(base_, gamma_, t);
}

double PgdusModel::hazard(double t) const {
  return kind() == BaselineKind::inverse_weibull ? pgdusiw_hazard(iw_params(), t)
                                                 : pgdus_hazard(base_, gamma_, t);
}

double PgdusModel::quantile(double prob) const {
  return kind() == BaselineKind::inverse_weibull ? pgdusiw_quantile(iw_params(), prob)
                                                 : pgdus_quantile(base_, gamma_, prob);
}

Sample PgdusModel::sample(std::size_t n, std::uint64_t seed) const {
  if (n == 0) {
    throw SampleError("sample size must be at least 1");
  }
  Rng rng(seed);
  std::vector<double> out(n);
  for (double& x : out) x = quantile(rng.uniform());
  return Sample(std::move(out), name() + " draw");
}

BaselineKind parse_model_name(std::string_view name) {
  std::string s(name);
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (s.rfind("pgdus-", 0) == 0) s.erase(0, 6);
  if (s == "iw") return BaselineKind::inverse_weibull;
  if (s == "w") return BaselineKind::weibull;
  if (s == "l") return BaselineKind::lomax;
  if (s == "ik") return BaselineKind::inverse_kumaraswamy;
  if (s == "e") return BaselineKind::exponential;
  throw ParameterError("unknown model '" + std::string(name) + "'");
}

std::string model_name(BaselineKind kind) {
  return "pgdus-" + std::string(short_name(kind));
}

}  // namespace pgdus
