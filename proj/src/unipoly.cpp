#include "bk/unipoly.hpp"

#include <algorithm>
#include <sstream>

#include "bk/errors.hpp"

namespace bk {

UniPoly::UniPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }

UniPoly UniPoly::from_roots(std::span<const Rational> roots) {
  UniPoly p = constant(1);
  for (const auto& r : roots) p = p * UniPoly({-r, Rational(1)});
  return p;
}

UniPoly UniPoly::from_roots(std::span<const long> roots) {
  std::vector<Rational> rs(roots.begin(), roots.end());
  return from_roots(std::span<const Rational>(rs));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational UniPoly::coefficient(int power) const {
  if (power < 0 || power > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(power)];
}

Rational UniPoly::operator()(const Rational& z) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  return UniPoly(std::move(out));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] -= b.coeffs_[i];
  return UniPoly(std::move(out));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(std::move(out));
}

std::string UniPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = degree(); d >= 0; --d) {
    const Rational& c = coeffs_[static_cast<std::size_t>(d)];
    if (c.is_zero()) continue;
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == Rational(1);
    if (d == 0 || !unit) os << mag;
    if (d > 0) {
      if (!unit) os << "*";
      os << var;
      if (d > 1) os << "^" << d;
    }
  }
  return os.str();
}

std::vector<Rational> series_expand_at_infinity(const UniPoly& numer, const UniPoly& denom, int order) {
  if (denom.is_zero()) throw InvalidInput("series expansion: zero denominator");
  if (!denom.is_monic()) throw InvalidInput("series expansion: denominator must be monic");
  if (order < 0) throw InvalidInput("series expansion: negative order");
  const auto n = static_cast<std::size_t>(order) + 1;
  std::vector<Rational> out(n);
  if (numer.is_zero()) return out;
  if (numer.degree() > denom.degree() + 1) {
    throw InvalidInput("series expansion: numerator degree exceeds denominator degree + 1");
  }
  // With u = 1/z: numer = z^dn N(u), denom = z^dd D(u), D(0) = 1.
  std::vector<Rational> num_u(n), den_u(n);
  for (std::size_t j = 0; j < n && static_cast<int>(j) <= numer.degree(); ++j) {
    num_u[j] = numer.coefficient(numer.degree() - static_cast<int>(j));
  }
  for (std::size_t j = 0; j < n && static_cast<int>(j) <= denom.degree(); ++j) {
    den_u[j] = denom.coefficient(denom.degree() - static_cast<int>(j));
  }
  // Long division with a monic divisor: no denominators are introduced.
  for (std::size_t j = 0; j < n; ++j) {
    Rational acc = num_u[j];
    for (std::size_t i = 1; i <= j; ++i) {
      if (!den_u[i].is_zero()) acc -= den_u[i] * out[j - i];
    }
    out[j] = acc;
  }
  return out;
}

namespace series {

std::vector<Rational> multiply(std::span<const Rational> a, std::span<const Rational> b, std::size_t n) {
  std::vector<Rational> out(n);
  for (std::size_t i = 0; i < a.size() && i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size() && i + j < n; ++j) {
      if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

std::vector<Rational> inverse(std::span<const Rational> a, std::size_t n) {
  if (a.empty() || a[0].is_zero()) throw InvalidInput("series inverse: zero constant term");
  std::vector<Rational> out(n);
  if (n == 0) return out;
  const Rational inv0 = Rational(1) / a[0];
  out[0] = inv0;
  for (std::size_t j = 1; j < n; ++j) {
    Rational acc(0);
    for (std::size_t i = 1; i <= j && i < a.size(); ++i) acc += a[i] * out[j - i];
    out[j] = -acc * inv0;
  }
  return out;
}

std::vector<Rational> power(std::span<const Rational> a, unsigned exponent, std::size_t n) {
  std::vector<Rational> result(n);
  if (n > 0) result[0] = Rational(1);
  std::vector<Rational> base(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(std::min(a.size(), n)));
  while (exponent > 0) {
    if (exponent & 1U) result = multiply(result, base, n);
    exponent >>= 1U;
    if (exponent > 0) base = multiply(base, base, n);
  }
  return result;
}

}  // namespace series

}  // namespace bk
