#include "bk/characters.hpp"
#include "bk/errors.hpp"
#include "bk/observables.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace bk;

namespace {

std::vector<Rational> rationals(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

std::vector<std::pair<long, Rational>> atoms_of(const Partition& lambda) {
  std::vector<std::pair<long, Rational>> out;
  for (const auto& a : transition_measure(lambda).atoms) out.emplace_back(a.location, a.weight);
  return out;
}

}  // namespace

TEST_CASE("profile coordinates") {
  const Profile fig = profile_coordinates(Partition{5, 3, 2, 2, 1});
  CHECK(fig.minima == std::vector<long>{-5, -3, 0, 2, 5});
  CHECK(fig.maxima == std::vector<long>{-4, -2, 1, 4});
  CHECK(profile_coordinates(Partition{}) == Profile{{0}, {}});
  CHECK(profile_coordinates(Partition{1}) == Profile{{-1, 1}, {0}});
  for (const Partition& lambda : enumerate_partitions_up_to(10)) {
    const auto [addable, removable] = oracle::corner_contents(lambda);
    const Profile p = profile_coordinates(lambda);
    CHECK(p.minima == addable);
    CHECK(p.maxima == removable);
  }
}

TEST_CASE("transition measure") {
  const auto empty = transition_measure(Partition{}).atoms;
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].location == 0);
  CHECK(empty[0].weight == Rational(1));
  const auto one = transition_measure(Partition{1}).atoms;
  REQUIRE(one.size() == 2);
  CHECK(one[0].location == -1);
  CHECK(one[0].weight == Rational(Integer(1), Integer(2)));
  const auto two_one = transition_measure(Partition{2, 1}).atoms;
  // Residues of (z+1)(z-1)/((z+2)z(z-2)): 3/8, 1/4, 3/8 (= dim(3,1)/8, dim(2,2)/8, dim(2,1,1)/8).
  REQUIRE(two_one.size() == 3);
  CHECK(two_one[0].location == -2);
  CHECK(two_one[0].weight == Rational(Integer(3), Integer(8)));
  CHECK(two_one[1].location == 0);
  CHECK(two_one[1].weight == Rational(Integer(1), Integer(4)));
  CHECK(two_one[2].location == 2);
  CHECK(two_one[2].weight == Rational(Integer(3), Integer(8)));

  // Weight of an addable box = dim(lambda + box) / ((n+1) dim lambda).
  for (const Partition& lambda : enumerate_partitions_up_to(8)) {
    Rational total, mean;
    for (const auto& a : transition_measure(lambda).atoms) {
      CHECK(a.weight.sign() > 0);
      total += a.weight;
      mean += a.weight * Rational(a.location);
      std::vector<int> parts = lambda.parts();
      for (int row = 1;; ++row) {
        const int len = row <= lambda.length() ? parts[static_cast<std::size_t>(row - 1)] : 0;
        if (len + 1 - row != a.location) continue;
        if (row > lambda.length()) parts.push_back(1);
        else ++parts[static_cast<std::size_t>(row - 1)];
        break;
      }
      const Rational expected(oracle::hook_length_dimension(Partition(parts)),
                              Integer(lambda.size() + 1) * oracle::hook_length_dimension(lambda));
      CHECK(a.weight == expected);
    }
    CHECK(total == Rational(1));
    CHECK(mean.is_zero());
  }
}

TEST_CASE("moments") {
  CHECK(moments(Partition{}, 4).values == rationals({0, 0, 0, 0}));
  CHECK(moments(Partition{1}, 4).values == rationals({0, 1, 0, 1}));
  CHECK(moments(Partition{2}, 3).values == rationals({0, 2, 2}));
  for (const Partition& lambda : enumerate_partitions_up_to(8)) {
    const auto direct = oracle::moments_from_atoms(atoms_of(lambda), 10);
    CHECK(moments(lambda, 10).values == std::vector<Rational>(direct.begin() + 1, direct.end()));
  }
}

TEST_CASE("Boolean cumulants") {
  CHECK(boolean_cumulants(Partition{1}, 4).values == rationals({0, 1, 0, 0}));
  CHECK(boolean_cumulants(Partition{2}, 4).values == rationals({0, 2, 2, 2}));
  CHECK(boolean_cumulants(Partition{1, 1}, 4).values == rationals({0, 2, -2, 2}));
  CHECK(boolean_cumulants(Partition{2, 1}, 4).values == rationals({0, 3, 0, 3}));
  CHECK(twisted_boolean_cumulants(Partition{2, 1}, 4).values == rationals({0, -3, 0, -3}));
  CHECK(boolean_cumulants(Partition{}, 3).values == rationals({0, 0, 0}));
  for (const Partition& lambda : enumerate_partitions_up_to(8)) {
    const auto b = oracle::boolean_from_moments(oracle::moments_from_atoms(atoms_of(lambda), 10));
    CHECK(boolean_cumulants(lambda, 10).values == std::vector<Rational>(b.begin() + 1, b.end()));
  }
}

TEST_CASE("free cumulants") {
  CHECK(free_cumulants(Partition{}, 3).values == rationals({0, 0, 0}));
  CHECK(free_cumulants(Partition{1}, 3).values == rationals({0, 1, 0}));
  CHECK(free_cumulants(Partition{2}, 3).values == rationals({0, 2, 2}));
  for (const Partition& lambda : enumerate_partitions_up_to(8)) {
    const auto r = oracle::free_from_moments(oracle::moments_from_atoms(atoms_of(lambda), 9));
    CHECK(free_cumulants(lambda, 9).values == std::vector<Rational>(r.begin() + 1, r.end()));
  }
}

TEST_CASE("observable invariants over small diagrams") {
  for (const Partition& lambda : enumerate_partitions_up_to(10)) {
    const Profile p = profile_coordinates(lambda);
    REQUIRE(p.minima.size() == p.maxima.size() + 1);
    long sx = 0, sy = 0;
    for (std::size_t i = 0; i < p.maxima.size(); ++i) {
      CHECK(p.minima[i] < p.maxima[i]);
      CHECK(p.maxima[i] < p.minima[i + 1]);
      sy += p.maxima[i];
    }
    for (long x : p.minima) sx += x;
    CHECK(sx == sy);
    const auto m = moments(lambda, 12);
    const auto b = boolean_cumulants(lambda, 12);
    const auto mt = moments(lambda.transpose(), 12);
    const auto bt = boolean_cumulants(lambda.transpose(), 12);
    CHECK(m.at(1).is_zero());
    CHECK(b.at(1).is_zero());
    CHECK(b.at(2) == Rational(lambda.size()));
    for (int k = 1; k <= 12; ++k) {
      CHECK(m.at(k).is_integer());
      CHECK(b.at(k).is_integer());
      const Rational s = k % 2 == 0 ? Rational(1) : Rational(-1);
      CHECK(mt.at(k) == s * m.at(k));
      CHECK(bt.at(k) == s * b.at(k));
    }
    CHECK(moment_cumulant_check(lambda, 12));
  }
  CHECK(moment_cumulant_check(Partition{1}, 6));
  CHECK(moment_cumulant_check(Partition{}, 6));
  CHECK(moment_cumulant_check(Partition{5, 3, 2, 2, 1}, 10));
  CHECK_THROWS_AS(moments(Partition{1}, -1), InvalidInput);
  CHECK(moments(Partition{3}, 1).values == rationals({0}));
}

TEST_CASE("characters: known values") {
  CHECK(mn_character(Partition{3}, Partition{2, 1}) == Rational(1));
  CHECK(mn_character(Partition{1, 1, 1}, Partition{2, 1}) == Rational(-1));
  CHECK(mn_character(Partition{2, 1}, Partition{3}) == Rational(Integer(-1), Integer(2)));
  CHECK(normalized_character(Partition{1}, Partition{3, 1}) == 4);
  CHECK(normalized_character(Partition{3}, Partition{2, 1}) == -3);
  CHECK(normalized_character(Partition{2}, Partition{1, 1}) == -2);
  CHECK(normalized_character(Partition{3}, Partition{1}) == 0);
  CHECK_THROWS_AS(mn_character_unnormalized(Partition{2}, Partition{1}), InvalidInput);
}

TEST_CASE("characters: dimension and orthogonality") {
  for (int n = 0; n <= 8; ++n)
    for (const Partition& lambda : enumerate_partitions(n)) CHECK(mn_dimension(lambda) == oracle::hook_length_dimension(lambda));
  for (int n = 0; n <= 7; ++n) {
    const auto shapes = enumerate_partitions(n);
    // Row orthogonality: sum over classes weighted by class size.
    for (const Partition& a : shapes) {
      for (const Partition& b : shapes) {
        Integer sum = 0;
        for (const Partition& pi : shapes)
          sum += conjugacy_class_size({pi, n}) * mn_character_unnormalized(a, pi) * mn_character_unnormalized(b, pi);
        CHECK(sum == (a == b ? factorial(static_cast<unsigned>(n)) : Integer(0)));
      }
    }
    // Column orthogonality.
    for (const Partition& pi : shapes) {
      for (const Partition& rho : shapes) {
        Integer sum = 0;
        for (const Partition& lambda : shapes)
          sum += mn_character_unnormalized(lambda, pi) * mn_character_unnormalized(lambda, rho);
        CHECK(sum == (pi == rho ? centralizer_order(pi) : Integer(0)));
      }
    }
  }
}

TEST_CASE("normalized characters against brute force over S_n") {
  // Sigma_(1)(lambda) = n and Sigma_(1,1)(lambda) = n(n-1) on every diagram.
  for (const Partition& lambda : enumerate_partitions_up_to(9)) {
    const long n = lambda.size();
    CHECK(normalized_character(Partition{1}, lambda) == n);
    CHECK(normalized_character(Partition{1, 1}, lambda) == n * (n - 1));
  }
}
