#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "bk/rational.hpp"

namespace bk {

/// Indexed variable families. The weight of a variable is its index minus the
/// family offset: x_i has weight i-2, y_i and c_i have weight i.
enum class VariableFamily { X, Y, C };

int family_offset(VariableFamily family);
const char* family_symbol(VariableFamily family);

/// A monomial is the multiset of its variable indices, sorted ascending.
using Monomial = std::vector<int>;

int weighted_degree(const Monomial& m, VariableFamily family);
/// Sum of the raw variable indices; governs the iota sign.
int index_sum(const Monomial& m);

/// Sparse multivariate polynomial with rational coefficients in one indexed
/// family of variables. Zero coefficients are never stored.
class GradedPolynomial {
 public:
  using TermMap = std::map<Monomial, Rational>;

  explicit GradedPolynomial(VariableFamily family = VariableFamily::X) : family_(family) {}

  static GradedPolynomial constant(VariableFamily family, const Rational& c);
  static GradedPolynomial variable(VariableFamily family, int index);
  static GradedPolynomial monomial(VariableFamily family, Monomial m, const Rational& c = Rational(1));

  VariableFamily family() const { return family_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const Monomial& m) const;

  /// Adds c to the coefficient of m (m need not be sorted).
  void add_term(Monomial m, const Rational& c);

  /// Largest weighted degree among the terms; -1 for the zero polynomial.
  int max_weighted_degree() const;
  /// Largest variable index used; -1 when only constants appear.
  int max_index() const;

  GradedPolynomial& operator+=(const GradedPolynomial& rhs);
  GradedPolynomial& operator-=(const GradedPolynomial& rhs);
  GradedPolynomial& operator*=(const Rational& scalar);
  friend GradedPolynomial operator+(GradedPolynomial a, const GradedPolynomial& b) { return a += b; }
  friend GradedPolynomial operator-(GradedPolynomial a, const GradedPolynomial& b) { return a -= b; }
  friend GradedPolynomial operator*(GradedPolynomial a, const Rational& s) { return a *= s; }
  friend GradedPolynomial operator*(const GradedPolynomial& a, const GradedPolynomial& b);
  friend bool operator==(const GradedPolynomial& a, const GradedPolynomial& b) {
    return a.family_ == b.family_ && a.terms_ == b.terms_;
  }

  Rational evaluate(const std::function<Rational(int)>& value_of) const;

  /// Renames every variable index through `map_index` and changes the family.
  GradedPolynomial relabel(VariableFamily target, const std::function<int(int)>& map_index) const;

  /// Terms in canonical output order: descending weighted degree, then
  /// descending lexicographic index sequence.
  std::vector<std::pair<Monomial, Rational>> ordered_terms() const;

  /// Canonical text, e.g. "x4 + x2^2 + x2"; the zero polynomial prints "0".
  std::string str() const;

 private:
  VariableFamily family_;
  TermMap terms_;
};

/// x_k -> (-1)^k x_k, applied termwise.
GradedPolynomial apply_iota(const GradedPolynomial& p);

std::string monomial_str(const Monomial& m, VariableFamily family);

}  // namespace bk
