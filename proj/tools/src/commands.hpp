#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace pgdus::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;       // numerical or I/O failure
inline constexpr int kExitBadInput = 2;      // malformed input or usage
inline constexpr int kExitNotConverged = 3;  // report written, some fit did not converge

struct FitConfig {
  std::filesystem::path data;
  std::string model = "pgdus-iw";
  std::string method = "ml";
  std::uint64_t seed = 2024;
  std::filesystem::path out = "-";
};

struct GofConfig {
  std::filesystem::path data;
  std::vector<std::string> models{"pgdus-iw", "pgdus-w", "pgdus-l", "pgdus-ik"};
  std::string method = "both";
  std::uint64_t seed = 2024;
  std::size_t B = 500;
  std::filesystem::path out = "-";
  std::string plot_prefix;  // <prefix>_cdf.csv and <prefix>_pdf.csv
};

struct SimulateConfig {
  double lambda = 1.0, theta = 0.6, gamma = 0.3;
  std::vector<std::size_t> sizes{50, 100, 150, 350};
  std::size_t reps = 1000;
  std::string method = "both";
  std::uint64_t seed = 2024;
  std::filesystem::path out = "-";
};

struct ReliabilityConfig {
  double gamma1 = 0.0, gamma2 = 0.0;  // closed form when both are set
  double lambda = 1.0, theta = 1.0;   // used by the oracle
  int c = 1, k = 1;
  std::vector<std::filesystem::path> strength;
  std::filesystem::path stress;
  std::string method = "ml";
  bool oracle = false;
  std::size_t draws = 1000000;
  std::uint64_t seed = 2024;
  std::filesystem::path out = "-";
};

struct SampleConfig {
  std::string model = "pgdus-iw";
  std::vector<double> params{1.0, 0.6, 0.3};
  std::size_t n = 100;
  std::uint64_t seed = 2024;
  std::filesystem::path out = "-";
};

int cmd_fit(const FitConfig& cfg);
int cmd_gof(const GofConfig& cfg);
int cmd_simulate(const SimulateConfig& cfg);
int cmd_reliability(const ReliabilityConfig& cfg);
int cmd_sample(const SampleConfig& cfg);

}  // namespace pgdus::cli
