#pragma once

#include <cstdint>
#include <random>

#include "ncg/types.hpp"

namespace ncg {

/// Seed expansion: every field draws from its own generator seeded with
/// splitmix64(root + counter * golden_gamma). Streams are reproducible on
/// one platform; no cross-platform bit equality is promised.
std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t derive_seed(std::uint64_t root, std::uint64_t counter);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double normal(double sd = 1.0) { return sd * std_normal_(engine_); }
  double uniform() { return unif_(engine_); }
  std::mt19937_64& engine() { return engine_; }

  /// Complex Ginibre matrix: real and imaginary parts N(0, sd^2/2), so each
  /// entry has E|z|^2 = sd^2.
  Mat ginibre(int rows, int cols, double sd = 1.0);
  /// (G + G*)/2 of a Ginibre matrix with entry standard deviation sd.
  Mat hermitian(int n, double sd = 1.0);

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> std_normal_{0.0, 1.0};
  std::uniform_real_distribution<double> unif_{0.0, 1.0};
};

}  // namespace ncg
