#include "linkmat/ensemble.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace linkmat {

void EnsembleConfig::validate() const {
  link.validate();
  if (n < 2) throw std::invalid_argument("ensemble: n must be >= 2");
  if (trials < 1) throw std::invalid_argument("ensemble: trials must be >= 1");
}

double uniform_from_bits(std::uint64_t h) {
  return (double(h >> 11) + 0.5) * 0x1.0p-53;
}

double derive_draw(std::uint64_t seed, std::uint64_t trial, std::int64_t l_value,
                   Distribution distribution) {
  const std::uint64_t k1 = splitmix64(seed);
  const std::uint64_t k2 = splitmix64(k1 ^ trial);
  const std::uint64_t key = splitmix64(k2 ^ static_cast<std::uint64_t>(l_value));
  if (distribution == Distribution::Rademacher) return (key >> 63) ? 1.0 : -1.0;
  // Box-Muller from two derived uniforms
  const double u1 = uniform_from_bits(key);
  const double u2 = uniform_from_bits(splitmix64(key ^ 0xD6E8FEB86659FD93ull));
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Eigen::MatrixXd build_matrix(const EnsembleConfig& config, int trial) {
  config.validate();
  if (trial < 0 || trial >= config.trials)
    throw std::invalid_argument("build_matrix: trial out of range");
  const int n = config.n;
  InputSequence seq(config.seed, static_cast<std::uint64_t>(trial), config.distribution);
  Eigen::MatrixXd m(n, n);
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      const double v = seq.at(config.link.eval(i, j));
      m(i - 1, j - 1) = v;
      m(j - 1, i - 1) = v;
    }
  }
  return m;
}

const char* distribution_name(Distribution d) {
  return d == Distribution::StandardNormal ? "standard_normal" : "rademacher";
}

}  // namespace linkmat
