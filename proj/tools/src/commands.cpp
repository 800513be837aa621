#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "pgdus/distribution.hpp"
#include "pgdus/error.hpp"
#include "pgdus/estimation.hpp"
#include "pgdus/gof.hpp"
#include "pgdus/reliability.hpp"
#include "pgdus/rng.hpp"
#include "pgdus/sample.hpp"
#include "pgdus/simulation.hpp"
#include "report.hpp"

namespace pgdus::cli {

namespace {

constexpr std::size_t kGridPoints = 512;

std::vector<Method> methods_from(const std::string& flag) {
  if (flag == "both") return {Method::ml, Method::mps};
  return {parse_method(flag)};
}

std::string real_text(double v) {
  if (!std::isfinite(v)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

FitOptions fit_options(std::uint64_t seed) {
  FitOptions opts;
  opts.seed = derive_seed(seed, {0x666974});
  return opts;
}

// Plot data for every fitted report: CDF against the ECDF, and densities.
void write_plot_data(const Sample& s, const std::vector<GofReport>& reports, const std::string& prefix) {
  std::vector<const GofReport*> usable;
  for (const GofReport& r : reports) {
    if (r.fit) usable.push_back(&r);
  }
  const double lo = 0.8 * s.min();
  const double hi = 1.2 * s.max();
  std::ostringstream cdf, pdf;
  cdf << "t,ecdf";
  pdf << "t";
  for (const GofReport* r : usable) {
    const std::string column = r->model + "_" + std::string(method_name(r->method));
    cdf << ',' << column;
    pdf << ',' << column;
  }
  cdf << '\n';
  pdf << '\n';
  for (std::size_t i = 0; i < kGridPoints; ++i) {
    const double t = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(kGridPoints - 1);
    cdf << real_text(t) << ',' << real_text(ecdf(s, t));
    pdf << real_text(t);
    for (const GofReport* r : usable) {
      cdf << ',' << real_text(r->fit->model.cdf(t));
      pdf << ',' << real_text(r->fit->model.pdf(t));
    }
    cdf << '\n';
    pdf << '\n';
  }
  write_text(prefix + "_cdf.csv", cdf.str());
  write_text(prefix + "_pdf.csv", pdf.str());
}

json oracle_json(const StressStrengthParams& p, const std::optional<MultiComponentSpec>& spec,
                 double r, std::size_t draws, std::uint64_t seed) {
  const double freq = mc_oracle_r(p, spec, draws, derive_seed(seed, {0x6f7261}));
  const double sigma = std::sqrt(std::max(r * (1.0 - r), 0.0) / static_cast<double>(draws));
  return {{"value", real(freq)},
          {"draws", draws},
          {"sigma", real(sigma)},
          {"within_3_sigma", std::abs(freq - r) <= 3.0 * sigma + 1e-15}};
}

}  // namespace

int cmd_fit(const FitConfig& cfg) {
  const Sample s = read_sample_csv(cfg.data);
  const BaselineKind kind = parse_model_name(cfg.model);
  json fits = json::array();
  bool all_converged = true;
  for (Method m : methods_from(cfg.method)) {
    const FitResult fit = fit_model(s, kind, m, fit_options(cfg.seed));
    all_converged = all_converged && fit.converged;
    fits.push_back(fit_json(fit));
  }
  json doc{{"schema", kSchema},
           {"command", "fit"},
           {"data", {{"path", cfg.data.string()}, {"n", s.size()}}},
           {"seed", cfg.seed},
           {"fits", fits}};
  write_json(cfg.out, doc);
  return all_converged ? kExitOk : kExitNotConverged;
}

int cmd_gof(const GofConfig& cfg) {
  const Sample s = read_sample_csv(cfg.data);
  std::vector<BaselineKind> kinds;
  for (const std::string& m : cfg.models) kinds.push_back(parse_model_name(m));
  CompareOptions opts;
  opts.methods = methods_from(cfg.method);
  opts.B = cfg.B;
  opts.seed = cfg.seed;
  opts.fit = fit_options(cfg.seed);
  const std::vector<GofReport> reports = compare_models(s, kinds, opts);

  json list = json::array();
  bool all_ok = true;
  for (const GofReport& r : reports) {
    list.push_back(gof_json(r));
    all_ok = all_ok && r.ok;
  }
  std::string prefix = cfg.plot_prefix;
  if (prefix.empty()) {
    prefix = cfg.out == "-" ? std::string("pgdus_gof") : std::filesystem::path(cfg.out).replace_extension().string();
  }
  json doc{{"schema", kSchema},
           {"command", "gof"},
           {"data", {{"path", cfg.data.string()}, {"n", s.size()}}},
           {"seed", cfg.seed},
           {"B", cfg.B},
           {"plots", {{"cdf", prefix + "_cdf.csv"}, {"pdf", prefix + "_pdf.csv"}}},
           {"reports", list}};
  write_plot_data(s, reports, prefix);
  write_json(cfg.out, doc);
  return all_ok ? kExitOk : kExitNotConverged;
}

int cmd_simulate(const SimulateConfig& cfg) {
  StudySpec spec;
  spec.truth = Params{cfg.lambda, cfg.theta, cfg.gamma};
  spec.sample_sizes = cfg.sizes;
  spec.replications = cfg.reps;
  spec.methods = methods_from(cfg.method);
  spec.seed = cfg.seed;
  const StudyResult result = run_study(spec);
  write_text(cfg.out, study_csv(result));
  return kExitOk;
}

int cmd_reliability(const ReliabilityConfig& cfg) {
  const MultiComponentSpec spec{cfg.c, cfg.k};
  spec.validate();
  const bool multi = !(cfg.c == 1 && cfg.k == 1);
  const std::optional<MultiComponentSpec> oracle_spec = multi ? std::optional(spec) : std::nullopt;
  json doc{{"schema", kSchema}, {"command", "reliability"}, {"c", cfg.c}, {"k", cfg.k}, {"seed", cfg.seed}};

  if (cfg.strength.empty() && cfg.stress.empty()) {
    const double r = multi ? r_multi(spec, cfg.gamma1, cfg.gamma2) : r_single(cfg.gamma1, cfg.gamma2);
    doc["mode"] = "closed_form";
    doc["gamma1"] = real(cfg.gamma1);
    doc["gamma2"] = real(cfg.gamma2);
    doc["r"] = real(r);
    if (cfg.oracle) {
      const StressStrengthParams p{cfg.lambda, cfg.theta, cfg.gamma1, cfg.gamma2};
      doc["oracle"] = oracle_json(p, oracle_spec, r, cfg.draws, cfg.seed);
    }
    write_json(cfg.out, doc);
    return kExitOk;
  }

  if (cfg.strength.empty() || cfg.stress.empty()) {
    throw SampleError("estimation needs --strength and --stress files");
  }
  std::vector<Sample> strength;
  for (const auto& path : cfg.strength) strength.push_back(read_sample_csv(path));
  const Sample stress = read_sample_csv(cfg.stress);
  const Method method = parse_method(cfg.method);
  const FitOptions opts = fit_options(cfg.seed);
  const ReliabilityFit fit = multi || strength.size() > 1
                                 ? estimate_rck(strength, stress, spec, method, opts)
                                 : estimate_r(TwoSample{strength.front(), stress}, method, opts);
  doc["mode"] = "estimate";
  doc["fit"] = reliability_fit_json(fit);
  doc["r"] = real(fit.r_hat);
  if (cfg.oracle) doc["oracle"] = oracle_json(fit.params, oracle_spec, fit.r_hat, cfg.draws, cfg.seed);
  write_json(cfg.out, doc);
  return fit.converged ? kExitOk : kExitNotConverged;
}

int cmd_sample(const SampleConfig& cfg) {
  const PgdusModel model(parse_model_name(cfg.model), cfg.params);
  const Sample s = model.sample(cfg.n, cfg.seed);
  if (cfg.out == "-") {
    std::ostringstream text;
    text.precision(17);
    text << "t\n";
    for (double v : s.values()) text << v << '\n';
    write_text("-", text.str());
  } else {
    write_sample_csv(cfg.out, s.values());
  }
  return kExitOk;
}

}  // namespace pgdus::cli
