#include "report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "pgdus/error.hpp"

namespace pgdus::cli {

json real(double v) {
  if (!std::isfinite(v)) return nullptr;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

json params_json(const PgdusModel& m) {
  json out = json::object();
  const auto names = param_names(m.kind());
  const auto packed = m.packed();
  for (std::size_t i = 0; i < names.size(); ++i) out[std::string(names[i])] = real(packed[i]);
  out["gamma"] = real(m.gamma());
  return out;
}

json fit_json(const FitResult& fit) {
  json out;
  out["model"] = fit.model.name();
  out["method"] = std::string(method_name(fit.method));
  out["params"] = params_json(fit.model);
  out["objective"] = real(fit.objective);
  out["log_likelihood"] = real(fit.log_likelihood);
  out["converged"] = fit.converged;
  out["iterations"] = fit.iterations;
  out["curvature"] = real(fit.curvature);
  out["n"] = fit.n;
  try {
    const InfoCriteria ic = info_criteria(fit);
    out["aicc"] = real(ic.aicc);
    out["bicc"] = real(ic.bicc);
  } catch (const DomainError&) {
    out["aicc"] = nullptr;
    out["bicc"] = nullptr;
  }
  return out;
}

json gof_json(const GofReport& r) {
  json out;
  out["model"] = r.model;
  out["method"] = std::string(method_name(r.method));
  out["rank"] = r.rank;
  out["ok"] = r.ok;
  out["diagnostic"] = r.diagnostic;
  out["fit"] = r.fit ? fit_json(*r.fit) : json(nullptr);
  out["ks"] = real(r.stats.ks);
  out["ad"] = real(r.stats.ad);
  out["cvm"] = real(r.stats.cvm);
  out["ks_p"] = real(r.ks_p);
  out["ad_p"] = real(r.ad_p);
  out["cvm_p"] = real(r.cvm_p);
  out["bootstrap_used"] = r.bootstrap_used;
  out["bootstrap_failed"] = r.bootstrap_failed;
  out["aicc"] = real(r.aicc);
  out["bicc"] = real(r.bicc);
  return out;
}

json reliability_fit_json(const ReliabilityFit& fit) {
  json out;
  out["method"] = std::string(method_name(fit.method));
  out["params"] = {{"lambda", real(fit.params.lambda)},
                   {"theta", real(fit.params.theta)},
                   {"gamma1", real(fit.params.gamma1)},
                   {"gamma2", real(fit.params.gamma2)}};
  out["r_hat"] = real(fit.r_hat);
  out["objective"] = real(fit.objective);
  out["converged"] = fit.converged;
  out["iterations"] = fit.iterations;
  out["curvature"] = real(fit.curvature);
  return out;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw SampleError("cannot open " + path.string() + " for writing");
  file << text;
  if (!file) throw SampleError("failed writing " + path.string());
}

void write_json(const std::filesystem::path& path, const json& doc) {
  write_text(path, doc.dump(2) + "\n");
}

}  // namespace pgdus::cli
