#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace pgdus {

std::uint64_t splitmix64(std::uint64_t& state);

// Seed for an independent stream identified by `path` under a root seed, e.g.
// derive_seed(seed, {method, size_index, replicate}). Pure function of its
// arguments, so streams never depend on evaluation order.
std::uint64_t derive_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> path);

class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  // Uniform on the open interval (0,1), 53-bit resolution.
  double uniform();
  // Standard normal (Box-Muller on uniform()).
  double normal();

  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
  double spare_normal_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace pgdus
