#include "linkmat/link_function.hpp"

#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <unordered_map>

namespace linkmat {

namespace {

using i128 = __int128;

constexpr std::int64_t kI64Max = std::numeric_limits<std::int64_t>::max();
constexpr std::int64_t kI64Min = std::numeric_limits<std::int64_t>::min();

std::int64_t narrow_checked(i128 v, const char* what) {
  if (v > i128(kI64Max) || v < i128(kI64Min))
    throw std::overflow_error(std::string("link evaluation overflow in ") + what);
  return static_cast<std::int64_t>(v);
}

int degree(std::span<const std::int64_t> c) {
  // leading zeros do not count toward the degree
  std::size_t lead = 0;
  while (lead < c.size() && c[lead] == 0) ++lead;
  return c.size() == lead ? 0 : static_cast<int>(c.size() - lead - 1);
}

}  // namespace

std::int64_t poly_eval_checked(std::span<const std::int64_t> coeffs, std::int64_t x) {
  i128 acc = 0;
  for (std::int64_t c : coeffs) {
    i128 next;
    if (__builtin_mul_overflow(acc, i128(x), &next))
      throw std::overflow_error("polynomial evaluation overflow");
    if (__builtin_add_overflow(next, i128(c), &acc))
      throw std::overflow_error("polynomial evaluation overflow");
  }
  return narrow_checked(acc, "polynomial evaluation");
}

std::string poly_to_string(std::span<const std::int64_t> coeffs) {
  std::string out;
  for (std::size_t idx = 0; idx < coeffs.size(); ++idx) {
    const std::int64_t c = coeffs[idx];
    const int p = static_cast<int>(coeffs.size() - idx - 1);
    if (c == 0) continue;
    if (!out.empty()) out += c < 0 ? "-" : "+";
    else if (c < 0) out += "-";
    const std::int64_t a = std::abs(c);
    if (a != 1 || p == 0) out += std::to_string(a);
    if (p >= 1) out += "x";
    if (p >= 2) out += "^" + std::to_string(p);
  }
  if (out.empty()) out = "0";
  return out;
}

LinkFunction LinkFunction::generalized_toeplitz(std::int64_t alpha, std::int64_t beta) {
  LinkFunction l;
  l.kind = LinkKind::GeneralizedToeplitz;
  l.alpha = alpha;
  l.beta = beta;
  l.validate();
  return l;
}

LinkFunction LinkFunction::generalized_hankel(std::int64_t alpha, std::int64_t beta) {
  LinkFunction l;
  l.kind = LinkKind::GeneralizedHankel;
  l.alpha = alpha;
  l.beta = beta;
  l.validate();
  return l;
}

LinkFunction LinkFunction::polynomial_toeplitz(std::vector<std::int64_t> p1,
                                               std::vector<std::int64_t> p2) {
  LinkFunction l;
  l.kind = LinkKind::PolynomialToeplitz;
  l.p1_coeffs = std::move(p1);
  l.p2_coeffs = std::move(p2);
  l.validate();
  return l;
}

LinkFunction LinkFunction::polynomial_hankel(std::vector<std::int64_t> p1,
                                             std::vector<std::int64_t> p2) {
  LinkFunction l;
  l.kind = LinkKind::PolynomialHankel;
  l.p1_coeffs = std::move(p1);
  l.p2_coeffs = std::move(p2);
  l.validate();
  return l;
}

LinkFunction LinkFunction::general_bivariate(std::vector<std::int64_t> p1,
                                             std::vector<std::int64_t> p2,
                                             ZoneSign sign) {
  LinkFunction l;
  l.kind = LinkKind::GeneralBivariate;
  l.p1_coeffs = std::move(p1);
  l.p2_coeffs = std::move(p2);
  l.sign = sign;
  l.validate();
  return l;
}

void LinkFunction::validate() const {
  switch (kind) {
    case LinkKind::GeneralizedToeplitz:
    case LinkKind::GeneralizedHankel:
      if (alpha < 1 || beta < 1)
        throw std::invalid_argument("generalized link requires alpha >= 1 and beta >= 1");
      return;
    case LinkKind::PolynomialToeplitz:
    case LinkKind::PolynomialHankel:
    case LinkKind::GeneralBivariate: {
      const int d1 = degree(p1_coeffs);
      const int d2 = degree(p2_coeffs);
      if (p1_coeffs.empty() || p2_coeffs.empty() || d1 == 0 || d2 == 0)
        throw std::invalid_argument("link polynomials must be nonconstant");
      if (kind != LinkKind::GeneralBivariate && d1 == d2)
        throw std::invalid_argument("polynomial link requires deg(p1) != deg(p2)");
      return;
    }
  }
  throw std::invalid_argument("unknown link kind");
}

ZoneSign LinkFunction::effective_sign() const {
  switch (kind) {
    case LinkKind::GeneralizedToeplitz:
    case LinkKind::PolynomialToeplitz:
      return ZoneSign::Minus;
    case LinkKind::GeneralizedHankel:
    case LinkKind::PolynomialHankel:
      return ZoneSign::Plus;
    case LinkKind::GeneralBivariate:
      return sign;
  }
  return ZoneSign::Minus;
}

Zone zone(std::int64_t i, std::int64_t j) { return i <= j ? Zone::Zone1 : Zone::Zone2; }

std::int64_t LinkFunction::eval(std::int64_t i, std::int64_t j) const {
  if (is_linear()) {
    // values stay small at grid scale; still guard the products
    i128 v;
    if (kind == LinkKind::GeneralizedToeplitz)
      v = i <= j ? i128(alpha) * i - i128(beta) * j : -i128(beta) * i + i128(alpha) * j;
    else
      v = i <= j ? i128(alpha) * i + i128(beta) * j : i128(beta) * i + i128(alpha) * j;
    return narrow_checked(v, "linear link");
  }
  const bool plus = effective_sign() == ZoneSign::Plus;
  if (i <= j) {
    const i128 a = poly_eval_checked(p1_coeffs, i);
    const i128 b = poly_eval_checked(p2_coeffs, j);
    return narrow_checked(plus ? a + b : a - b, "link value");
  }
  const i128 a = poly_eval_checked(p2_coeffs, i);
  const i128 b = poly_eval_checked(p1_coeffs, j);
  return narrow_checked(plus ? a + b : -a + b, "link value");
}

std::string LinkFunction::kind_name() const {
  switch (kind) {
    case LinkKind::GeneralizedToeplitz: return "generalized_toeplitz";
    case LinkKind::GeneralizedHankel: return "generalized_hankel";
    case LinkKind::PolynomialToeplitz: return "polynomial_toeplitz";
    case LinkKind::PolynomialHankel: return "polynomial_hankel";
    case LinkKind::GeneralBivariate: return "general_bivariate";
  }
  return "unknown";
}

std::string LinkFunction::describe() const {
  switch (kind) {
    case LinkKind::GeneralizedToeplitz:
      return "T(alpha=" + std::to_string(alpha) + ",beta=" + std::to_string(beta) + ")";
    case LinkKind::GeneralizedHankel:
      return "H(alpha=" + std::to_string(alpha) + ",beta=" + std::to_string(beta) + ")";
    case LinkKind::PolynomialToeplitz:
      return "PT(p1=" + poly_to_string(p1_coeffs) + ",p2=" + poly_to_string(p2_coeffs) + ")";
    case LinkKind::PolynomialHankel:
      return "PH(p1=" + poly_to_string(p1_coeffs) + ",p2=" + poly_to_string(p2_coeffs) + ")";
    case LinkKind::GeneralBivariate:
      return std::string("GB(p1=") + poly_to_string(p1_coeffs) +
             ",p2=" + poly_to_string(p2_coeffs) +
             (effective_sign() == ZoneSign::Plus ? ",+)" : ",-)");
  }
  return "?";
}

int delta_l(const LinkFunction& link, int n) {
  if (n < 1) throw std::invalid_argument("delta_l: n must be >= 1");
  int best = 0;
  std::unordered_map<std::int64_t, int> counts;
  for (int k = 1; k <= n; ++k) {
    counts.clear();
    for (int m = 1; m <= n; ++m) {
      const int c = ++counts[link.eval(k, m)];
      if (c > best) best = c;
    }
  }
  return best;
}

namespace {

// 1 + max(i*|a_i|, i=1..deg-1) / (deg*|lead|) as an exact fraction (num, den)
std::pair<std::int64_t, std::int64_t> root_bound_fraction(
    std::span<const std::int64_t> coeffs) {
  const int deg = degree(coeffs);
  if (deg == 0) throw std::invalid_argument("monotonicity_radius: constant polynomial");
  const std::size_t lead_idx = coeffs.size() - 1 - deg;
  const std::int64_t lead = std::abs(coeffs[lead_idx]);
  std::int64_t inner = 0;  // empty when deg == 1
  for (int i = 1; i <= deg - 1; ++i) {
    const std::int64_t ai = coeffs[coeffs.size() - 1 - i];
    inner = std::max(inner, i * std::abs(ai));
  }
  return {std::int64_t(deg) * lead + inner, std::int64_t(deg) * lead};
}

}  // namespace

std::int64_t monotonicity_radius(std::span<const std::int64_t> p1_coeffs,
                                 std::span<const std::int64_t> p2_coeffs) {
  const auto [n1, d1] = root_bound_fraction(p1_coeffs);
  const auto [n2, d2] = root_bound_fraction(p2_coeffs);
  // ceil(max(n1/d1, n2/d2)) with positive fractions
  const bool first = i128(n1) * d2 >= i128(n2) * d1;
  const std::int64_t num = first ? n1 : n2;
  const std::int64_t den = first ? d1 : d2;
  return (num + den - 1) / den;
}

}  // namespace linkmat
