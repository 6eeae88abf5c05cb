#include "bk/graded_polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace bk {

int family_offset(VariableFamily family) { return family == VariableFamily::X ? 2 : 0; }

const char* family_symbol(VariableFamily family) {
  switch (family) {
    case VariableFamily::X: return "x";
    case VariableFamily::Y: return "y";
    case VariableFamily::C: return "c";
  }
  return "?";
}

int weighted_degree(const Monomial& m, VariableFamily family) {
  return index_sum(m) - static_cast<int>(m.size()) * family_offset(family);
}

int index_sum(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

GradedPolynomial GradedPolynomial::constant(VariableFamily family, const Rational& c) {
  return monomial(family, {}, c);
}

GradedPolynomial GradedPolynomial::variable(VariableFamily family, int index) {
  return monomial(family, {index});
}

GradedPolynomial GradedPolynomial::monomial(VariableFamily family, Monomial m, const Rational& c) {
  GradedPolynomial p(family);
  p.add_term(std::move(m), c);
  return p;
}

Rational GradedPolynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void GradedPolynomial::add_term(Monomial m, const Rational& c) {
  if (c.is_zero()) return;
  std::sort(m.begin(), m.end());
  auto [it, inserted] = terms_.try_emplace(std::move(m), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int GradedPolynomial::max_weighted_degree() const {
  int best = -1;
  for (const auto& [m, c] : terms_) best = std::max(best, weighted_degree(m, family_));
  return best;
}

int GradedPolynomial::max_index() const {
  int best = -1;
  for (const auto& [m, c] : terms_) {
    if (!m.empty()) best = std::max(best, m.back());
  }
  return best;
}

GradedPolynomial& GradedPolynomial::operator+=(const GradedPolynomial& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

GradedPolynomial& GradedPolynomial::operator-=(const GradedPolynomial& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

GradedPolynomial& GradedPolynomial::operator*=(const Rational& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

GradedPolynomial operator*(const GradedPolynomial& a, const GradedPolynomial& b) {
  GradedPolynomial out(a.family_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m;
      m.reserve(ma.size() + mb.size());
      std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
      out.add_term(std::move(m), ca * cb);
    }
  }
  return out;
}

Rational GradedPolynomial::evaluate(const std::function<Rational(int)>& value_of) const {
  Rational total(0);
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (int idx : m) term *= value_of(idx);
    total += term;
  }
  return total;
}

GradedPolynomial GradedPolynomial::relabel(VariableFamily target, const std::function<int(int)>& map_index) const {
  GradedPolynomial out(target);
  for (const auto& [m, c] : terms_) {
    Monomial mapped;
    mapped.reserve(m.size());
    for (int idx : m) mapped.push_back(map_index(idx));
    out.add_term(std::move(mapped), c);
  }
  return out;
}

std::vector<std::pair<Monomial, Rational>> GradedPolynomial::ordered_terms() const {
  std::vector<std::pair<Monomial, Rational>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(), [this](const auto& a, const auto& b) {
    const int da = weighted_degree(a.first, family_);
    const int db = weighted_degree(b.first, family_);
    if (da != db) return da > db;
    return b.first < a.first;
  });
  return out;
}

std::string monomial_str(const Monomial& m, VariableFamily family) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < m.size();) {
    std::size_t j = i;
    while (j < m.size() && m[j] == m[i]) ++j;
    if (!first) os << "*";
    first = false;
    os << family_symbol(family) << m[i];
    if (j - i > 1) os << "^" << (j - i);
    i = j;
  }
  return os.str();
}

std::string GradedPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : ordered_terms()) {
    const Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (m.empty()) {
      os << mag;
      continue;
    }
    if (mag != Rational(1)) os << mag << "*";
    os << monomial_str(m, family_);
  }
  return os.str();
}

GradedPolynomial apply_iota(const GradedPolynomial& p) {
  GradedPolynomial out(p.family());
  for (const auto& [m, c] : p.terms()) out.add_term(m, index_sum(m) % 2 == 0 ? c : -c);
  return out;
}

}  // namespace bk
