#include <exception>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "pgdus/error.hpp"

namespace {

using namespace pgdus::cli;

const char* const kModels = "pgdus-iw|pgdus-w|pgdus-l|pgdus-ik|pgdus-e";

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"PGDUS inverse Weibull: fitting, goodness of fit, simulation and stress-strength reliability"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "pgdus 1.0.0");

  FitConfig fit;
  auto* fit_cmd = app.add_subcommand("fit", "Fit a PGDUS model to a one-column CSV sample");
  fit_cmd->add_option("--data", fit.data, "Input CSV with header 't'")->required();
  fit_cmd->add_option("--model", fit.model, kModels)->capture_default_str();
  fit_cmd->add_option("--method", fit.method, "ml|mps|both")->capture_default_str();
  fit_cmd->add_option("--seed", fit.seed, "Seed for restart jitter")->capture_default_str();
  fit_cmd->add_option("--out", fit.out, "JSON report path, '-' for stdout")->capture_default_str();

  GofConfig gof;
  auto* gof_cmd = app.add_subcommand("gof", "Compare PGDUS models: KS/AD/CVM with bootstrap p-values, AICc/BICc");
  gof_cmd->add_option("--data", gof.data, "Input CSV with header 't'")->required();
  gof_cmd->add_option("--model,--models", gof.models, kModels)->delimiter(',')->capture_default_str();
  gof_cmd->add_option("--method", gof.method, "ml|mps|both")->capture_default_str();
  gof_cmd->add_option("--B", gof.B, "Bootstrap resamples (>= 100, or 0 to skip)")->capture_default_str();
  gof_cmd->add_option("--seed", gof.seed)->capture_default_str();
  gof_cmd->add_option("--out", gof.out, "JSON report path, '-' for stdout")->capture_default_str();
  gof_cmd->add_option("--plot-prefix", gof.plot_prefix,
                      "Prefix of the <prefix>_cdf.csv and <prefix>_pdf.csv grids (default: from --out)");

  SimulateConfig sim;
  auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo bias/MSE study of the ML and MPS estimators");
  sim_cmd->add_option("--lambda", sim.lambda)->capture_default_str();
  sim_cmd->add_option("--theta", sim.theta)->capture_default_str();
  sim_cmd->add_option("--gamma", sim.gamma)->capture_default_str();
  sim_cmd->add_option("--sizes", sim.sizes, "Sample sizes")->delimiter(',')->capture_default_str();
  sim_cmd->add_option("--reps", sim.reps, "Replications per cell")->capture_default_str();
  sim_cmd->add_option("--method", sim.method, "ml|mps|both")->capture_default_str();
  sim_cmd->add_option("--seed", sim.seed)->capture_default_str();
  sim_cmd->add_option("--out", sim.out, "CSV table path, '-' for stdout")->capture_default_str();

  ReliabilityConfig rel;
  auto* rel_cmd = app.add_subcommand("reliability", "Stress-strength reliability R or R_{c,k}");
  rel_cmd->add_option("--gamma1", rel.gamma1, "Strength exponent (closed form)");
  rel_cmd->add_option("--gamma2", rel.gamma2, "Stress exponent (closed form)");
  rel_cmd->add_option("--lambda", rel.lambda, "Shared shape, for the oracle")->capture_default_str();
  rel_cmd->add_option("--theta", rel.theta, "Shared scale, for the oracle")->capture_default_str();
  rel_cmd->add_option("--c", rel.c, "Required surviving components")->capture_default_str();
  rel_cmd->add_option("--k", rel.k, "Number of strength components")->capture_default_str();
  rel_cmd->add_option("--strength", rel.strength, "Strength CSV (repeat k times for R_{c,k})");
  rel_cmd->add_option("--stress", rel.stress, "Stress CSV");
  rel_cmd->add_option("--method", rel.method, "ml|mps")->capture_default_str();
  rel_cmd->add_flag("--oracle", rel.oracle, "Add a Monte Carlo cross-check");
  rel_cmd->add_option("--draws", rel.draws, "Oracle draws")->capture_default_str();
  rel_cmd->add_option("--seed", rel.seed)->capture_default_str();
  rel_cmd->add_option("--out", rel.out, "JSON report path, '-' for stdout")->capture_default_str();

  SampleConfig smp;
  auto* smp_cmd = app.add_subcommand("sample", "Draw a seeded sample from a PGDUS model");
  smp_cmd->add_option("--model", smp.model, kModels)->capture_default_str();
  smp_cmd->add_option("--params", smp.params, "Baseline parameters then gamma")->delimiter(',')->capture_default_str();
  smp_cmd->add_option("--n", smp.n)->capture_default_str();
  smp_cmd->add_option("--seed", smp.seed)->capture_default_str();
  smp_cmd->add_option("--out", smp.out, "CSV path, '-' for stdout")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (*fit_cmd) return cmd_fit(fit);
    if (*gof_cmd) return cmd_gof(gof);
    if (*sim_cmd) return cmd_simulate(sim);
    if (*rel_cmd) return cmd_reliability(rel);
    if (*smp_cmd) return cmd_sample(smp);
  } catch (const pgdus::SampleError& e) {
    std::cerr << "pgdus: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::invalid_argument& e) {  // ParameterError
    std::cerr << "pgdus: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::domain_error& e) {
    std::cerr << "pgdus: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "pgdus: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitFailure;
}
