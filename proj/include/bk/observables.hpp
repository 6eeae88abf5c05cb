#pragma once

#include <string>
#include <vector>

#include "bk/partition.hpp"
#include "bk/rational.hpp"
#include "bk/unipoly.hpp"

namespace bk {

/// Interlacing local minima x_1 < ... < x_n and maxima y_1 < ... < y_{n-1}
/// of a Young diagram's profile drawn in Russian convention.
struct Profile {
  std::vector<long> minima;
  std::vector<long> maxima;

  friend bool operator==(const Profile&, const Profile&) = default;
};

/// Minima are the contents of addable cells, maxima the contents of
/// removable cells.
Profile profile_coordinates(const Partition& lambda);

/// prod (z - y_j) and prod (z - x_i): numerator and denominator of G_lambda.
UniPoly profile_max_polynomial(const Profile& profile);
UniPoly profile_min_polynomial(const Profile& profile);

struct Atom {
  long location = 0;
  Rational weight;
};

/// Transition measure: atoms at the minima with the residues of G_lambda.
struct TransitionMeasure {
  std::vector<Atom> atoms;
};

TransitionMeasure transition_measure(const Partition& lambda);

enum class ObservableKind { Moment, Boolean, TwistedBoolean, Free };

const char* kind_name(ObservableKind kind);

/// values[k-1] holds the k-th observable, k = 1..max_k().
struct ObservableVector {
  ObservableKind kind = ObservableKind::Moment;
  std::vector<Rational> values;

  int max_k() const { return static_cast<int>(values.size()); }
  const Rational& at(int k) const { return values.at(static_cast<std::size_t>(k - 1)); }
};

ObservableVector moments(const Partition& lambda, int max_k);
ObservableVector boolean_cumulants(const Partition& lambda, int max_k);
/// The sign-flipped Boolean cumulants.
ObservableVector twisted_boolean_cumulants(const Partition& lambda, int max_k);
/// Free cumulants R_1..R_K from the compositional inverse of G_lambda
/// (R_1 = 0 since the transition measure is centred).
ObservableVector free_cumulants(const Partition& lambda, int max_k);

/// Checks M_{k+1} = sum_{i<k} M_i B_{k+1-i} for 1 <= k < max_k, with M_0 = 1.
bool moment_cumulant_check(const Partition& lambda, int max_k);

}  // namespace bk
