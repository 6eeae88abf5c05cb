#include <random>

#include "bk/errors.hpp"
#include "bk/graded_polynomial.hpp"
#include "bk/linear_solve.hpp"
#include "bk/rational.hpp"
#include "bk/unipoly.hpp"
#include "doctest.h"

using namespace bk;

namespace {

std::vector<Rational> rationals(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

UniPoly poly(std::initializer_list<long> low_to_high) { return UniPoly(rationals(low_to_high)); }

}  // namespace

TEST_CASE("rational canonical form") {
  const Rational a(Integer(6), Integer(-4));
  CHECK(a.numerator() == -3);
  CHECK(a.denominator() == 2);
  CHECK(Rational(Integer(0), Integer(7)).denominator() == 1);
  CHECK(Rational::parse("-10/4") == Rational(Integer(-5), Integer(2)));
  CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), InvalidInput);
  CHECK_THROWS_AS(Rational::parse("abc"), InvalidInput);
  CHECK_THROWS_AS(Rational(Integer(1), Integer(2)).to_integer(), InvariantViolation);
  CHECK(falling_factorial(5, 2) == 20);
  CHECK(falling_factorial(2, 3) == 0);
  CHECK(falling_factorial(4, 0) == 1);
}

TEST_CASE("series expansion at infinity") {
  SUBCASE("empty diagram: G = 1/z") {
    const auto e = series_expand_at_infinity(poly({1}), poly({0, 1}), 4);
    CHECK(e == rationals({1, 0, 0, 0, 0}));
  }
  SUBCASE("numer = denom = z") {
    const auto e = series_expand_at_infinity(poly({0, 1}), poly({0, 1}), 3);
    CHECK(e == rationals({1, 0, 0, 0}));
  }
  SUBCASE("H for (1): (z^2-1)/z = z - 1/z") {
    const auto e = series_expand_at_infinity(poly({-1, 0, 1}), poly({0, 1}), 5);
    CHECK(e == rationals({1, 0, -1, 0, 0, 0}));
  }
  SUBCASE("H for (2): (z^2-z-2)/(z-1)") {
    const auto e = series_expand_at_infinity(poly({-2, -1, 1}), poly({-1, 1}), 5);
    CHECK(e == rationals({1, 0, -2, -2, -2, -2}));
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(series_expand_at_infinity(poly({1}), UniPoly(), 2), InvalidInput);
    CHECK_THROWS_AS(series_expand_at_infinity(poly({1}), poly({0, 2}), 2), InvalidInput);
    CHECK_THROWS_AS(series_expand_at_infinity(poly({0, 0, 0, 1}), poly({0, 1}), 2), InvalidInput);
  }
}

TEST_CASE("series division round trip and product convolution") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<long> coef(-5, 5);
  for (int trial = 0; trial < 60; ++trial) {
    const int dd = 1 + trial % 4;
    const int dn = dd - 1 + trial % 3;  // dd-1 .. dd+1
    std::vector<Rational> den(static_cast<std::size_t>(dd) + 1), num(static_cast<std::size_t>(dn) + 1);
    for (auto& c : den) c = Rational(coef(rng));
    den.back() = Rational(1);
    for (auto& c : num) c = Rational(coef(rng));
    num.back() = Rational(1 + std::abs(coef(rng)));
    const UniPoly numer(num), denom(den);
    const int order = 8;
    const auto e = series_expand_at_infinity(numer, denom, order);
    // e in powers of u = 1/z times z^{dn-dd}; multiply back by D(u).
    std::vector<Rational> d_u(static_cast<std::size_t>(order) + 1);
    for (int j = 0; j <= dd && j <= order; ++j) d_u[static_cast<std::size_t>(j)] = den[static_cast<std::size_t>(dd - j)];
    const auto back = series::multiply(e, d_u, static_cast<std::size_t>(order) + 1);
    for (int j = 0; j <= order; ++j) {
      const Rational expected = j <= dn ? num[static_cast<std::size_t>(dn - j)] : Rational(0);
      CHECK(back[static_cast<std::size_t>(j)] == expected);
    }
    // Product of two quotients: coefficients convolve.
    const auto e2 = series_expand_at_infinity(denom, denom * UniPoly::constant(1), order);
    const auto prod = series_expand_at_infinity(numer * denom, denom * denom, order);
    CHECK(prod == series::multiply(e, e2, static_cast<std::size_t>(order) + 1));
  }
}

TEST_CASE("solve_exact") {
  SUBCASE("identity") {
    const RationalMatrix a{{1, 0}, {0, 1}};
    const auto out = solve_exact(a, rationals({3, -1}));
    REQUIRE(out.status == SolveOutcome::Status::Solved);
    CHECK(out.solution == rationals({3, -1}));
  }
  SUBCASE("consistent duplicate rows") {
    const RationalMatrix a{{1}, {1}};
    const auto out = solve_exact(a, rationals({2, 2}));
    REQUIRE(out.status == SolveOutcome::Status::Solved);
    CHECK(out.solution == rationals({2}));
  }
  SUBCASE("contradictory rows") {
    const RationalMatrix a{{1}, {1}};
    const auto out = solve_exact(a, rationals({2, 3}));
    CHECK(out.status == SolveOutcome::Status::Inconsistent);
    CHECK(out.inconsistent_row == 1u);
  }
  SUBCASE("rank deficient") {
    const RationalMatrix a{{1, 2}, {2, 4}, {3, 6}};
    CHECK(solve_exact(a, rationals({1, 2, 3})).status == SolveOutcome::Status::RankDeficient);
  }
  SUBCASE("fewer rows than columns is a precondition error") {
    const RationalMatrix a{{1, 2}};
    CHECK_THROWS_AS(solve_exact(a, rationals({1})), InvalidInput);
  }
}

TEST_CASE("solve_exact reproduces A x = b exactly on random consistent systems") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> coef(-9, 9);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t cols = 1 + static_cast<std::size_t>(trial % 6);
    const std::size_t rows = cols + static_cast<std::size_t>(trial % 4);
    RationalMatrix a(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) a(r, c) = Rational(Integer(coef(rng)), Integer(1 + std::abs(coef(rng))));
    std::vector<Rational> x(cols);
    for (auto& v : x) v = Rational(Integer(coef(rng)), Integer(1 + std::abs(coef(rng))));
    const auto b = a * x;
    const auto out = solve_exact(a, b);
    if (out.status == SolveOutcome::Status::Solved) {
      CHECK(a * out.solution == b);
      CHECK(out.solution == x);
    } else {
      CHECK(out.status == SolveOutcome::Status::RankDeficient);
    }
  }
}

TEST_CASE("graded polynomial arithmetic and printing") {
  const auto x2 = GradedPolynomial::variable(VariableFamily::X, 2);
  const auto x3 = GradedPolynomial::variable(VariableFamily::X, 3);
  const auto x4 = GradedPolynomial::variable(VariableFamily::X, 4);
  CHECK(GradedPolynomial(VariableFamily::X).str() == "0");
  CHECK((x2 * x2 + x2).str() == "x2^2 + x2");
  CHECK((x2 + x4 + x2 * x2).str() == "x4 + x2^2 + x2");
  CHECK((x2 * x3 * Rational(3) - x2).str() == "3*x2*x3 - x2");
  CHECK((x4 + x2 * x2).max_weighted_degree() == 2);
  CHECK((x2 - x2).is_zero());
  CHECK(GradedPolynomial::constant(VariableFamily::C, 1).str() == "1");
  const auto y = x3.relabel(VariableFamily::Y, [](int i) { return i - 2; });
  CHECK(y.str() == "y1");
  CHECK(y.max_weighted_degree() == 1);
}

TEST_CASE("iota") {
  const auto x2 = GradedPolynomial::variable(VariableFamily::X, 2);
  const auto x3 = GradedPolynomial::variable(VariableFamily::X, 3);
  CHECK(apply_iota(x2) == x2);
  CHECK(apply_iota(x3) == x3 * Rational(-1));
  CHECK(apply_iota(x2 * x2 + x2) == x2 * x2 + x2);

  std::mt19937 rng(99);
  std::uniform_int_distribution<int> idx(2, 7), len(0, 4), c(-4, 4);
  for (int trial = 0; trial < 50; ++trial) {
    GradedPolynomial p(VariableFamily::X);
    for (int t = 0; t < 5; ++t) {
      Monomial m;
      for (int i = len(rng); i > 0; --i) m.push_back(idx(rng));
      p.add_term(m, Rational(c(rng)));
    }
    CHECK(apply_iota(apply_iota(p)) == p);
  }
}
