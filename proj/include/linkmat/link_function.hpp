#pragma once
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace linkmat {

enum class LinkKind {
  GeneralizedToeplitz,
  GeneralizedHankel,
  PolynomialToeplitz,
  PolynomialHankel,
  GeneralBivariate,
};

enum class ZoneSign { Minus, Plus };

// Zone1 = upper triangle including the main diagonal, Zone2 = strict lower.
enum class Zone { Zone1, Zone2 };

/// Symmetric integer-valued bivariate map (i,j) -> index into the input
/// sequence. Two zone branches:
///   Zone1 (i <= j):  p1(i) -/+ p2(j)
///   Zone2 (i > j):  -/+ p2(i) + p1(j)
/// Generalized kinds are the linear special case p1 = alpha*x, p2 = beta*x.
struct LinkFunction {
  LinkKind kind = LinkKind::GeneralizedToeplitz;
  std::int64_t alpha = 1;
  std::int64_t beta = 1;
  std::vector<std::int64_t> p1_coeffs;  // highest degree first
  std::vector<std::int64_t> p2_coeffs;
  ZoneSign sign = ZoneSign::Minus;  // only independent for GeneralBivariate

  static LinkFunction generalized_toeplitz(std::int64_t alpha, std::int64_t beta);
  static LinkFunction generalized_hankel(std::int64_t alpha, std::int64_t beta);
  static LinkFunction polynomial_toeplitz(std::vector<std::int64_t> p1,
                                          std::vector<std::int64_t> p2);
  static LinkFunction polynomial_hankel(std::vector<std::int64_t> p1,
                                        std::vector<std::int64_t> p2);
  static LinkFunction general_bivariate(std::vector<std::int64_t> p1,
                                        std::vector<std::int64_t> p2, ZoneSign sign);

  // Throws std::invalid_argument when the parameter set is out of contract
  // (alpha/beta < 1, constant polynomials, equal degrees for polynomial kinds).
  void validate() const;

  bool is_linear() const {
    return kind == LinkKind::GeneralizedToeplitz || kind == LinkKind::GeneralizedHankel;
  }
  ZoneSign effective_sign() const;

  // Total on i,j >= 1; throws std::overflow_error instead of wrapping.
  std::int64_t eval(std::int64_t i, std::int64_t j) const;

  std::string kind_name() const;  // snake_case, stable (used in CSV)
  std::string describe() const;   // short human-readable form

  bool operator==(const LinkFunction&) const = default;
};

Zone zone(std::int64_t i, std::int64_t j);

// Exact maximum multiplicity of any value within a row of the n x n grid:
// max over k,t of #{m <= n : L(k,m) = t}, by brute force.
int delta_l(const LinkFunction& link, int n);

// Integer bound R such that all real roots of p1' and p2' lie in [-R, R],
// from the Cauchy-type bound R_i = 1 + max(|a_1|, 2|a_2|, ...)/(deg*|lead|),
// R = ceil(max(R_1, R_2)). Inner max over an empty set is 0.
// Throws std::invalid_argument for constant polynomials.
std::int64_t monotonicity_radius(std::span<const std::int64_t> p1_coeffs,
                                 std::span<const std::int64_t> p2_coeffs);

// Horner evaluation with overflow detection (throws std::overflow_error).
std::int64_t poly_eval_checked(std::span<const std::int64_t> coeffs, std::int64_t x);

// "x^2-10x+3" style rendering, highest degree first.
std::string poly_to_string(std::span<const std::int64_t> coeffs);

}  // namespace linkmat
