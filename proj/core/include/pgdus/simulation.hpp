#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "pgdus/estimation.hpp"
#include "pgdus/params.hpp"

namespace pgdus {

struct StudySpec {
  Params truth{1.0, 0.6, 0.3};
  std::vector<std::size_t> sample_sizes{50, 100, 150, 350};
  std::size_t replications = 1000;
  std::vector<Method> methods{Method::ml, Method::mps};
  std::uint64_t seed = 2024;
  FitOptions fit{};  // its seed is replaced per replicate

  // Throws ParameterError unless replications >= 1, every size >= 4, and the
  // method list is non-empty.
  void validate() const;
};

struct BiasMse {
  double mean = 0.0;
  double bias = 0.0;
  double mse = 0.0;
};

// mean, mean - truth and the average squared error. Throws SampleError on an
// empty list.
BiasMse bias_mse(std::span<const double> estimates, double truth);

inline constexpr std::array<const char*, 3> kStudyParameters{"lambda", "theta", "gamma"};

struct StudyRow {
  Method method = Method::ml;
  std::size_t n = 0;
  std::string parameter;  // "lambda", "theta" or "gamma"
  BiasMse stats;
  std::size_t used = 0;      // converged replicates entering the aggregate
  std::size_t failures = 0;  // replicates excluded (non-converged or thrown)
};

// Estimates of one (method, n) cell, in replicate order. converged[i] tells
// whether estimates[i] entered the aggregate.
struct StudyCell {
  Method method = Method::ml;
  std::size_t n = 0;
  std::vector<Params> estimates;
  std::vector<bool> converged;
};

struct StudyResult {
  StudySpec spec;
  std::vector<StudyRow> rows;    // method-major, then n, then parameter
  std::vector<StudyCell> cells;  // method-major, then n

  const StudyRow& row(Method m, std::size_t n, std::string_view parameter) const;
};

// Replicate r of size index j under method index i draws its sample from
// derive_seed(seed, {i, j, r, 0}) and seeds its restarts with
// derive_seed(seed, {i, j, r, 1}). Replicates run in parallel; the result
// does not depend on the thread count.
StudyResult run_study(const StudySpec& spec);

// Columns: method, n, parameter, mean, bias, mse, failures.
void write_study_csv(const std::filesystem::path& path, const StudyResult& result);
std::string study_csv(const StudyResult& result);

}  // namespace pgdus
