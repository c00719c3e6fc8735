#pragma once
#include <Eigen/Dense>
#include <cstdint>
#include <unordered_map>

#include "linkmat/link_function.hpp"

namespace linkmat {

enum class Distribution { StandardNormal, Rademacher };

struct EnsembleConfig {
  LinkFunction link;
  int n = 2;
  Distribution distribution = Distribution::StandardNormal;
  std::uint64_t seed = 0;
  int trials = 1;

  void validate() const;  // throws std::invalid_argument
};

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Counter-based draw: a pure function of (seed, trial, l_value), so matrices
// come out identical regardless of evaluation order or worker count.
double derive_draw(std::uint64_t seed, std::uint64_t trial, std::int64_t l_value,
                   Distribution distribution);

// uniform in (0,1), never exactly 0 or 1
double uniform_from_bits(std::uint64_t h);

/// Lazily populated map l_value -> draw for one matrix. Distinct l_values get
/// i.i.d. draws; repeated lookups return the identical value.
class InputSequence {
 public:
  InputSequence(std::uint64_t seed, std::uint64_t trial, Distribution distribution)
      : seed_(seed), trial_(trial), distribution_(distribution) {}

  double at(std::int64_t l_value) {
    auto it = cache_.find(l_value);
    if (it != cache_.end()) return it->second;
    const double v = derive_draw(seed_, trial_, l_value, distribution_);
    cache_.emplace(l_value, v);
    return v;
  }

  std::size_t distinct_values() const { return cache_.size(); }

 private:
  std::uint64_t seed_;
  std::uint64_t trial_;
  Distribution distribution_;
  std::unordered_map<std::int64_t, double> cache_;
};

// Real symmetric n x n matrix with entry (i,j) = a_{L(i,j)}; positions share a
// draw exactly when their L-values coincide.
Eigen::MatrixXd build_matrix(const EnsembleConfig& config, int trial);

const char* distribution_name(Distribution d);

}  // namespace linkmat
