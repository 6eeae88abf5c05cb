#include "bk/observables.hpp"

#include <algorithm>

#include "bk/errors.hpp"

namespace bk {

Profile profile_coordinates(const Partition& lambda) {
  Profile profile;
  const auto& parts = lambda.parts();
  const int len = lambda.length();
  auto part = [&](int row) { return row <= len ? parts[static_cast<std::size_t>(row - 1)] : 0; };
  for (int row = 1; row <= len + 1; ++row) {
    // Addable cell at the end of this row.
    if (row == 1 || part(row - 1) > part(row)) profile.minima.push_back(part(row) + 1 - row);
    // Removable cell at the end of this row.
    if (row <= len && part(row) > part(row + 1)) profile.maxima.push_back(part(row) - row);
  }
  std::sort(profile.minima.begin(), profile.minima.end());
  std::sort(profile.maxima.begin(), profile.maxima.end());
  return profile;
}

UniPoly profile_max_polynomial(const Profile& profile) { return UniPoly::from_roots(std::span<const long>(profile.maxima)); }

UniPoly profile_min_polynomial(const Profile& profile) { return UniPoly::from_roots(std::span<const long>(profile.minima)); }

TransitionMeasure transition_measure(const Partition& lambda) {
  const Profile profile = profile_coordinates(lambda);
  TransitionMeasure mu;
  for (long x : profile.minima) {
    Rational num(1), den(1);
    for (long y : profile.maxima) num *= Rational(x - y);
    for (long other : profile.minima) {
      if (other != x) den *= Rational(x - other);
    }
    mu.atoms.push_back(Atom{x, num / den});
  }
  return mu;
}

const char* kind_name(ObservableKind kind) {
  switch (kind) {
    case ObservableKind::Moment: return "moment";
    case ObservableKind::Boolean: return "boolean";
    case ObservableKind::TwistedBoolean: return "twisted-boolean";
    case ObservableKind::Free: return "free";
  }
  return "?";
}

namespace {

void require_order(int max_k) {
  if (max_k < 0) throw InvalidInput("observable order must be non-negative");
}

}  // namespace

ObservableVector moments(const Partition& lambda, int max_k) {
  require_order(max_k);
  const Profile p = profile_coordinates(lambda);
  const auto e = series_expand_at_infinity(profile_max_polynomial(p), profile_min_polynomial(p), max_k);
  return ObservableVector{ObservableKind::Moment, std::vector<Rational>(e.begin() + 1, e.end())};
}

ObservableVector boolean_cumulants(const Partition& lambda, int max_k) {
  require_order(max_k);
  const Profile p = profile_coordinates(lambda);
  const auto e = series_expand_at_infinity(profile_min_polynomial(p), profile_max_polynomial(p), max_k);
  ObservableVector out{ObservableKind::Boolean, {}};
  for (int k = 1; k <= max_k; ++k) out.values.push_back(-e[static_cast<std::size_t>(k)]);
  return out;
}

ObservableVector twisted_boolean_cumulants(const Partition& lambda, int max_k) {
  ObservableVector b = boolean_cumulants(lambda, max_k);
  for (auto& v : b.values) v = -v;
  b.kind = ObservableKind::TwistedBoolean;
  return b;
}

ObservableVector free_cumulants(const Partition& lambda, int max_k) {
  require_order(max_k);
  const ObservableVector m = moments(lambda, max_k);
  const auto n = static_cast<std::size_t>(max_k) + 1;
  // K(w) = F(w)/w with F = 1 + sum R_k w^k. G(K(w)) = w is equivalent to
  //   sum_j M_j w^j F(w)^{-j-1} = 1,
  // whose w^k coefficient is linear in R_k with coefficient -1 and otherwise
  // involves only R_1..R_{k-1}.
  std::vector<Rational> f(n);
  f[0] = Rational(1);
  for (int k = 1; k <= max_k; ++k) {
    const auto order = static_cast<std::size_t>(k) + 1;
    const auto f_inv = series::inverse(std::span<const Rational>(f.data(), order), order);
    std::vector<Rational> f_inv_pow = f_inv;  // F^{-1}
    Rational coefficient = f_inv[static_cast<std::size_t>(k)];
    for (int j = 1; j <= k; ++j) {
      f_inv_pow = series::multiply(f_inv_pow, f_inv, order);  // F^{-j-1}
      const Rational& mj = m.at(j);
      if (!mj.is_zero()) coefficient += mj * f_inv_pow[static_cast<std::size_t>(k - j)];
    }
    f[static_cast<std::size_t>(k)] = coefficient;
  }
  return ObservableVector{ObservableKind::Free, std::vector<Rational>(f.begin() + 1, f.end())};
}

bool moment_cumulant_check(const Partition& lambda, int max_k) {
  if (max_k < 1) return true;
  const ObservableVector m = moments(lambda, max_k);
  const ObservableVector b = boolean_cumulants(lambda, max_k);
  auto moment = [&](int i) { return i == 0 ? Rational(1) : m.at(i); };
  for (int k = 1; k < max_k; ++k) {
    Rational rhs(0);
    for (int i = 0; i <= k - 1; ++i) rhs += moment(i) * b.at(k + 1 - i);
    if (moment(k + 1) != rhs) return false;
  }
  return true;
}

}  // namespace bk
