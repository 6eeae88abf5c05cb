#pragma once

#include <span>
#include <string>
#include <vector>

#include "bk/rational.hpp"

namespace bk {

/// Dense univariate polynomial over the rationals. coefficients()[i] is the
/// coefficient of z^i; trailing zeros are never stored.
class UniPoly {
 public:
  /// Degree reported for the zero polynomial.
  static constexpr int kZeroDegree = -1;

  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coefficients);

  static UniPoly constant(const Rational& c);
  /// prod_i (z - root_i); the empty product is 1.
  static UniPoly from_roots(std::span<const Rational> roots);
  static UniPoly from_roots(std::span<const long> roots);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == Rational(1); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(int power) const;
  Rational operator()(const Rational& z) const;

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

  std::string str(const std::string& var = "z") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Expansion of numer/denom around z = infinity.
///
/// Writes numer/denom = sum_{j>=0} e_j z^{top-j} with top = deg(numer) - deg(denom)
/// and returns e_0, ..., e_order. For a Cauchy transform (top = -1) e_k is the
/// k-th moment; for its reciprocal (top = +1) e_k is minus the k-th Boolean
/// cumulant. A zero numerator yields all zeros.
///
/// Throws InvalidInput when denom is zero or not monic, or when
/// deg(numer) > deg(denom) + 1.
std::vector<Rational> series_expand_at_infinity(const UniPoly& numer, const UniPoly& denom, int order);

namespace series {

// Truncated power series in one variable, stored low order first. All
// operations keep terms of order < n only.

std::vector<Rational> multiply(std::span<const Rational> a, std::span<const Rational> b, std::size_t n);
/// Multiplicative inverse; requires a[0] != 0.
std::vector<Rational> inverse(std::span<const Rational> a, std::size_t n);
std::vector<Rational> power(std::span<const Rational> a, unsigned exponent, std::size_t n);

}  // namespace series

}  // namespace bk
