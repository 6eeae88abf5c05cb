#include "bk/basischange.hpp"
#include "bk/characters.hpp"
#include "bk/errors.hpp"
#include "bk/heiscalc.hpp"
#include "bk/observables.hpp"
#include "doctest.h"
#include "group_algebra.hpp"

using namespace bk;

namespace {

Configuration strand(int dots, std::vector<Bubble> bubbles = {}) { return Configuration{{dots}, std::move(bubbles)}; }

GradedPolynomial y_poly(std::initializer_list<std::pair<Monomial, long>> terms) {
  GradedPolynomial p(VariableFamily::Y);
  for (const auto& [m, c] : terms) p.add_term(m, Rational(c));
  return p;
}

// Every list of n non-negative integers with sum <= total.
void dot_vectors(int n, int total, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == n) {
    out.push_back(cur);
    return;
  }
  for (int d = 0; d <= total; ++d) {
    cur.push_back(d);
    dot_vectors(n, total - d, cur, out);
    cur.pop_back();
  }
}

}  // namespace

TEST_CASE("bubble_move_step") {
  DiagramState k0;
  k0.add(strand(0, {Bubble{0, 1}}), 1);
  k0.add(strand(0), -1);
  CHECK(bubble_move_step(0) == k0);
  DiagramState k1;
  k1.add(strand(0, {Bubble{1, 1}}), 1);
  k1.add(strand(1), -2);
  CHECK(bubble_move_step(1) == k1);
  DiagramState k2;
  k2.add(strand(0, {Bubble{2, 1}}), 1);
  k2.add(strand(2), -3);
  k2.add(strand(0, {Bubble{0, 0}}), 1);
  CHECK(bubble_move_step(2) == k2);
  CHECK_THROWS_AS(bubble_move_step(-1), InvalidInput);
}

TEST_CASE("bubble_move_full") {
  using M = std::map<std::pair<int, int>, Integer>;
  using N = std::map<int, Integer>;
  CHECK(bubble_move_full(0).m == M{{{0, 0}, 1}});
  CHECK(bubble_move_full(0).n == N{{0, 1}});
  CHECK(bubble_move_full(1).m == M{{{1, 0}, 1}});
  CHECK(bubble_move_full(1).n == N{{1, 2}});
  CHECK(bubble_move_full(2).m == M{{{2, 0}, 1}, {{0, 0}, 1}});
  CHECK(bubble_move_full(2).n == N{{2, 3}, {0, 1}});
  for (int k = 0; k <= 12; ++k) {
    const auto& move = bubble_move_full(k);
    for (const auto& [ij, c] : move.m) {
      CHECK(c > 0);
      CHECK(ij.first + ij.second <= k);
    }
    for (const auto& [l, c] : move.n) {
      CHECK(c > 0);
      CHECK(l <= k);
    }
  }
}

TEST_CASE("bubble moves hold pointwise and after closing the strand") {
  for (int k = 0; k <= 6; ++k) {
    CAPTURE(k);
    const auto lhs = DiagramState::single(strand(0, {Bubble{k, 0}}));
    const auto step = bubble_move_step(k);
    const auto full = bubble_move_full(k).as_state();
    for (const Partition& mu : enumerate_partitions_up_to(7)) {
      for (long x : profile_coordinates(mu).minima) {
        CHECK(evaluate_strand_state(step, mu, x) == evaluate_strand_state(lhs, mu, x));
        CHECK(evaluate_strand_state(full, mu, x) == evaluate_strand_state(lhs, mu, x));
      }
      CHECK(evaluate_closed_strand(step, mu) == boolean_cumulants(mu, k + 2).at(k + 2));
      CHECK(evaluate_closed_strand(full, mu) == boolean_cumulants(mu, k + 2).at(k + 2));
    }
  }
  // A wrong coefficient is detected.
  DiagramState broken = bubble_move_step(2);
  broken.add(strand(2), 1);
  CHECK(evaluate_closed_strand(broken, Partition{2, 1}) != evaluate_closed_strand(bubble_move_step(2), Partition{2, 1}));
}

TEST_CASE("evaluate_center") {
  const auto c0 = GradedPolynomial::variable(VariableFamily::C, 0);
  const auto c1 = GradedPolynomial::variable(VariableFamily::C, 1);
  CHECK(evaluate_center(c0, Partition{2, 1}) == Rational(3));
  CHECK(evaluate_center(c1, Partition{1, 1}) == Rational(-2));
  CHECK(evaluate_center(GradedPolynomial::constant(VariableFamily::C, 1), Partition{4, 2}) == Rational(1));
  CHECK(evaluate_center(c0 * c1 + c0, Partition{2}) == Rational(2 * 2 + 2));
}

TEST_CASE("reduce_alpha known values") {
  for (int i = 0; i <= 4; ++i) CHECK(reduce_alpha(Partition{1}, {i}) == GradedPolynomial::variable(VariableFamily::Y, i));
  CHECK(reduce_alpha(Partition{1, 1}, {0, 0}) == y_poly({{{0, 0}, 1}, {{0}, 1}}));
  CHECK(reduce_alpha(Partition{2}, {0, 0}) == y_poly({{{1}, 1}}));
  CHECK(reduce_alpha(Partition{3}, {0, 0, 0}) == y_poly({{{2}, 1}, {{0, 0}, 1}, {{0}, 1}}));
  CHECK_THROWS_AS(reduce_alpha(Partition{2}, {0}), InvalidInput);
  CHECK_THROWS_AS(reduce_alpha(Partition{1}, {-1}), InvalidInput);
}

TEST_CASE("alpha_pi evaluates to the normalized character") {
  for (int n = 1; n <= 4; ++n) {
    for (const Partition& pi : enumerate_partitions(n)) {
      const auto alpha = alpha_in_center(pi, std::vector<int>(static_cast<std::size_t>(n), 0));
      for (const Partition& lambda : enumerate_partitions_up_to(7))
        CHECK(evaluate_center(alpha, lambda) == Rational(normalized_character(pi, lambda)));
    }
  }
}

TEST_CASE("reduce_alpha matches the solver route for |pi| <= 5") {
  for (int n = 1; n <= 5; ++n) {
    for (const Partition& pi : enumerate_partitions(n)) {
      CAPTURE(pi.str());
      CHECK(y_to_x(reduce_alpha(pi, std::vector<int>(static_cast<std::size_t>(n), 0))) == boolean_kerov_polynomial(pi));
    }
  }
}

TEST_CASE("reduce_alpha: positivity, degree bound, order independence") {
  ReduceOptions outer;
  outer.schedule = ExtractionSchedule::OutermostFirst;
  for (int n = 1; n <= 4; ++n) {
    std::vector<std::vector<int>> all_dots;
    std::vector<int> cur;
    dot_vectors(n, 3, cur, all_dots);
    for (const Partition& pi : enumerate_partitions(n)) {
      for (const auto& dots : all_dots) {
        int total = 0;
        for (int d : dots) total += d;
        const auto p = reduce_alpha(pi, dots);  // throws on a negative coefficient
        CHECK(p.max_weighted_degree() <= pi.reflection_degree() + total);
        CHECK(alpha_in_center(pi, dots) == alpha_in_center(pi, dots, outer));
      }
    }
  }
}

TEST_CASE("dropping the curl dot changes the result") {
  ReduceOptions mutated;
  mutated.curl_dot_shift = 0;
  bool differs = false;
  for (const Partition& pi : {Partition{2}, Partition{3}, Partition{2, 1}}) {
    try {
      differs = differs || y_to_x(reduce_alpha(pi, std::vector<int>(static_cast<std::size_t>(pi.size()), 0), mutated)) !=
                               boolean_kerov_polynomial(pi);
    } catch (const InvariantViolation&) {
      differs = true;
    }
  }
  CHECK(differs);
}

TEST_CASE("canonical diagrams") {
  const auto s = Permutation::from_cycles(5, {{2, 4}, {1, 5}});
  CHECK(canonical_diagram(s) == Permutation::from_cycles(5, {{1, 2}, {3, 4}}));
  CHECK(canonical_diagram(Permutation::from_cycles(4, {{2, 3, 4}})) == Permutation::from_cycles(4, {{2, 3, 4}}));
  CHECK(canonical_diagram(Permutation::identity(3)) == Permutation::identity(3));
}

TEST_CASE("dotted strand expansion") {
  const auto e0 = expand_dotted_strand(0);
  CHECK(e0.terms == std::map<Permutation, Integer>{{Permutation::identity(1), 1}});
  using Agg = std::map<Partition, Integer>;
  CHECK(aggregate_by_cycle_type(e0) == Agg{{Partition{1}, 1}});
  CHECK(aggregate_by_cycle_type(expand_dotted_strand(1)) == Agg{{Partition{2}, 1}});
  CHECK(aggregate_by_cycle_type(expand_dotted_strand(2)) == Agg{{Partition{3}, 1}, {Partition{1, 1}, 1}});
  for (int k = 0; k <= 7; ++k) {
    for (const auto& [sigma, m] : expand_dotted_strand(k).terms) {
      CHECK(m > 0);
      CHECK(sigma.degree() <= k + 1);
      CHECK(reflection_length(sigma) <= k);
      CHECK((k - reflection_length(sigma)) % 2 == 0);
      CHECK(canonical_diagram(sigma) == sigma);
    }
  }
  for (int k = 0; k <= 6; ++k) CHECK(aggregate_by_cycle_type(expand_dotted_strand(k)) == boolean_in_characters(k + 2));
}

TEST_CASE("dotted strand expansion reproduces X^k in the group algebra") {
  for (auto convention : {CurlConvention::CrossingAfter, CurlConvention::CrossingBefore}) {
    for (int m = 1; m <= 4; ++m) {
      const auto x = oracle::jucys_murphy(m);
      oracle::GroupElement power{{Permutation::identity(m + 1), 1}};
      for (int k = 0; k <= 5; ++k) {
        CAPTURE(m);
        CAPTURE(k);
        oracle::GroupElement model;
        for (const auto& [sigma, c] : expand_dotted_strand(k, convention).terms) oracle::add_diagram(model, sigma, c, m);
        std::erase_if(model, [](const auto& kv) { return kv.second == 0; });
        CHECK(model == power);
        power = oracle::multiply(power, x);
      }
    }
  }
}
