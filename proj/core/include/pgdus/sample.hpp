#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace pgdus {

// Positive observations plus a cached ascending copy.
class Sample {
 public:
  Sample() = default;
  // Throws SampleError on any non-finite or non-positive value.
  explicit Sample(std::vector<double> values, std::string label = {});

  std::span<const double> values() const { return values_; }
  std::span<const double> sorted() const { return sorted_; }
  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }
  const std::string& label() const { return label_; }

  double min() const;
  double max() const;
  double median() const;

  // Every observation multiplied by c > 0.
  Sample scaled(double c) const;

 private:
  std::vector<double> values_;
  std::vector<double> sorted_;
  std::string label_;
};

// Relief times of 20 patients receiving an analgesic (Gross & Clark, 1975).
// Same values as data/relief_times.csv.
Sample relief_times();

// CSV with a header row whose (only) column is `t`. Throws SampleError on
// malformed content, including an empty body.
Sample read_sample_csv(const std::filesystem::path& path);
void write_sample_csv(const std::filesystem::path& path, std::span<const double> values);

}  // namespace pgdus
