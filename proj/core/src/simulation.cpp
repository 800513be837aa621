#include "pgdus/simulation.hpp"

#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

#include "pgdus/error.hpp"
#include "pgdus/numeric.hpp"
#include "pgdus/parallel.hpp"
#include "pgdus/rng.hpp"

namespace pgdus {

namespace {

double component(const Params& p, std::size_t k) {
  return k == 0 ? p.lambda : k == 1 ? p.theta : p.gamma;
}

}  // namespace

void StudySpec::validate() const {
  truth.validate();
  if (replications < 1) throw ParameterError("a study needs at least one replication");
  if (sample_sizes.empty()) throw ParameterError("a study needs at least one sample size");
  for (std::size_t n : sample_sizes) {
    if (n < 4) throw ParameterError("study sample sizes must be at least 4");
  }
  if (methods.empty()) throw ParameterError("a study needs at least one method");
}

BiasMse bias_mse(std::span<const double> estimates, double truth) {
  if (estimates.empty()) throw SampleError("bias_mse of an empty list");
  CompensatedSum sum, squared;
  for (double v : estimates) {
    sum.add(v);
    squared.add((v - truth) * (v - truth));
  }
  const auto r = static_cast<double>(estimates.size());
  BiasMse out;
  out.mean = sum.value() / r;
  out.bias = out.mean - truth;
  out.mse = squared.value() / r;
  return out;
}

const StudyRow& StudyResult::row(Method m, std::size_t n, std::string_view parameter) const {
  for (const StudyRow& r : rows) {
    if (r.method == m && r.n == n && r.parameter == parameter) return r;
  }
  throw ParameterError("no study row for " + std::string(method_name(m)) + ", n=" + std::to_string(n) +
                       ", " + std::string(parameter));
}

StudyResult run_study(const StudySpec& spec) {
  spec.validate();
  StudyResult result;
  result.spec = spec;

  const std::size_t sizes = spec.sample_sizes.size();
  const std::size_t reps = spec.replications;
  const std::size_t cells = spec.methods.size() * sizes;
  result.cells.resize(cells);
  for (std::size_t i = 0; i < spec.methods.size(); ++i) {
    for (std::size_t j = 0; j < sizes; ++j) {
      StudyCell& cell = result.cells[i * sizes + j];
      cell.method = spec.methods[i];
      cell.n = spec.sample_sizes[j];
      cell.estimates.assign(reps, Params{});
      cell.converged.assign(reps, false);
    }
  }

  // vector<bool> is not safe to write concurrently; collect flags as bytes.
  std::vector<unsigned char> ok(cells * reps, 0);
  parallel_for(cells * reps, [&](std::size_t task) {
    const std::size_t c = task / reps;
    const std::size_t r = task % reps;
    const std::size_t i = c / sizes;
    const std::size_t j = c % sizes;
    StudyCell& cell = result.cells[c];
    try {
      const Sample s = sample(spec.truth, cell.n, derive_seed(spec.seed, {i, j, r, 0}));
      FitOptions opts = spec.fit;
      opts.seed = derive_seed(spec.seed, {i, j, r, 1});
      const FitResult fit = fit_model(s, BaselineKind::inverse_weibull, cell.method, opts);
      cell.estimates[r] = fit.params();
      ok[task] = fit.converged ? 1 : 0;
    } catch (const std::exception&) {
      ok[task] = 0;
    }
  });

  for (std::size_t c = 0; c < cells; ++c) {
    StudyCell& cell = result.cells[c];
    std::size_t used = 0;
    for (std::size_t r = 0; r < reps; ++r) {
      cell.converged[r] = ok[c * reps + r] != 0;
      used += cell.converged[r] ? 1 : 0;
    }
    for (std::size_t k = 0; k < kStudyParameters.size(); ++k) {
      StudyRow row;
      row.method = cell.method;
      row.n = cell.n;
      row.parameter = kStudyParameters[k];
      row.used = used;
      row.failures = reps - used;
      if (used > 0) {
        std::vector<double> values;
        values.reserve(used);
        for (std::size_t r = 0; r < reps; ++r) {
          if (cell.converged[r]) values.push_back(component(cell.estimates[r], k));
        }
        row.stats = bias_mse(values, component(spec.truth, k));
      } else {
        const double nan = std::numeric_limits<double>::quiet_NaN();
        row.stats = BiasMse{nan, nan, nan};
      }
      result.rows.push_back(std::move(row));
    }
  }
  return result;
}

std::string study_csv(const StudyResult& result) {
  std::ostringstream out;
  out << "method,n,parameter,mean,bias,mse,failures\n";
  out << std::setprecision(10);
  for (const StudyRow& r : result.rows) {
    out << method_name(r.method) << ',' << r.n << ',' << r.parameter << ',' << r.stats.mean << ','
        << r.stats.bias << ',' << r.stats.mse << ',' << r.failures << '\n';
  }
  return out.str();
}

void write_study_csv(const std::filesystem::path& path, const StudyResult& result) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw SampleError("cannot open " + path.string() + " for writing");
  file << study_csv(result);
  if (!file) throw SampleError("failed writing " + path.string());
}

}  // namespace pgdus
