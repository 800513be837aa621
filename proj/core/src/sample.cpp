#include "pgdus/sample.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "pgdus/error.hpp"

namespace pgdus {

Sample::Sample(std::vector<double> values, std::string label)
    : values_(std::move(values)), label_(std::move(label)) {
  for (double v : values_) {
    if (!std::isfinite(v) || v <= 0.0) {
      throw SampleError("sample values must be finite and > 0");
    }
  }
  sorted_ = values_;
  std::sort(sorted_.begin(), sorted_.end());
}

double Sample::min() const {
  if (empty()) throw SampleError("empty sample");
  return sorted_.front();
}

double Sample::max() const {
  if (empty()) throw SampleError("empty sample");
  return sorted_.back();
}

double Sample::median() const {
  if (empty()) throw SampleError("empty sample");
  const std::size_t n = sorted_.size();
  return n % 2 == 1 ? sorted_[n / 2] : 0.5 * (sorted_[n / 2 - 1] + sorted_[n / 2]);
}

Sample Sample::scaled(double c) const {
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw ParameterError("scale factor must be finite and > 0");
  }
  std::vector<double> v(values_);
  for (double& x : v) x *= c;
  return Sample(std::move(v), label_);
}

Sample relief_times() {
  return Sample({1.1, 1.4, 1.3, 1.7, 1.9, 1.8, 1.6, 2.2, 1.7, 2.7,
                 4.1, 1.8, 1.5, 1.2, 1.4, 3.0, 1.7, 2.3, 1.6, 2.0},
                "relief_times");
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Sample read_sample_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw SampleError("cannot open '" + path.string() + "'");
  }
  std::string line;
  if (!std::getline(in, line)) {
    throw SampleError("'" + path.string() + "' is empty");
  }
  std::string_view header = trim(line);
  if (header.size() >= 3 && header.substr(0, 3) == "\xEF\xBB\xBF") header.remove_prefix(3);
  if (trim(header) != "t") {
    throw SampleError("'" + path.string() + "': expected header 't', got '" +
                      std::string(header) + "'");
  }
  std::vector<double> values;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view field = trim(line);
    if (field.empty()) continue;
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc{} || ptr != field.data() + field.size()) {
      throw SampleError("'" + path.string() + "' line " + std::to_string(line_no) +
                        ": not a number: '" + std::string(field) + "'");
    }
    if (!std::isfinite(v) || v <= 0.0) {
      throw SampleError("'" + path.string() + "' line " + std::to_string(line_no) +
                        ": value must be positive");
    }
    values.push_back(v);
  }
  if (values.empty()) {
    throw SampleError("'" + path.string() + "' contains no observations");
  }
  return Sample(std::move(values), path.stem().string());
}

void write_sample_csv(const std::filesystem::path& path, std::span<const double> values) {
  std::ofstream out(path);
  if (!out) {
    throw SampleError("cannot write '" + path.string() + "'");
  }
  out << "t\n" << std::setprecision(17);
  for (double v : values) out << v << '\n';
}

}  // namespace pgdus
