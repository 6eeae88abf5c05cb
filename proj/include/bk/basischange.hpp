#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bk/graded_polynomial.hpp"
#include "bk/partition.hpp"
#include "bk/rational.hpp"

namespace bk {

/// Every monomial in x_2, ..., x_{D+2} of weighted degree <= D and raw total
/// degree <= cap, optionally restricted to index sums of one parity.
/// Ordered by (raw degree, index sequence); the empty monomial comes first.
struct MonomialBasis {
  int max_weighted_degree = 0;
  int raw_degree_cap = 0;
  std::optional<int> parity;
  std::vector<Monomial> monomials;

  static MonomialBasis enumerate(int max_weighted_degree, int raw_degree_cap, std::optional<int> parity = std::nullopt);
  std::size_t size() const { return monomials.size(); }
};

/// How an evaluation-based solve was pinned down.
struct EvaluationReport {
  std::size_t unknowns = 0;
  std::size_t pivot_rows = 0;
  /// Largest diagram size whose rows were fed to the eliminator.
  int solved_through_size = -1;
  /// Rows checked by evaluation only (the rest of the last fed size plus
  /// every diagram of the held-out sizes).
  std::vector<int> held_out_sizes;
  std::size_t held_out_rows = 0;
};

struct KerovOptions {
  /// Cap on the raw total degree of candidate monomials; default |pi|.
  std::optional<int> raw_degree_cap;
  /// x_j is evaluated as twisted_sign * B_j(lambda). -1 gives the twisted
  /// Boolean cumulants; +1 exists only to demonstrate test sensitivity.
  int twisted_sign = -1;
};

/// The polynomial P_pi with (-1)^{l(pi)} Sigma_pi(lambda) = P_pi(x_j = B^_j(lambda)).
/// Throws InvalidInput for the empty partition and InvariantViolation when
/// the evaluation system is inconsistent, fails a held-out row, or has a
/// non-integral solution.
GradedPolynomial boolean_kerov_polynomial(const Partition& pi, const KerovOptions& options = {},
                                          EvaluationReport* report = nullptr);

struct CharacterExpansionOptions {
  /// Restrict the candidate support to |pi| - l(pi) = k (mod 2).
  bool parity_restricted = true;
};

/// Coefficients m^k_pi with B_k = sum_pi m^k_pi Sigma_pi, over the candidates
/// |pi| - l(pi) <= k - 2 (which forces |pi| <= k - 1). Zero coefficients are
/// dropped. Same error behaviour as boolean_kerov_polynomial.
std::map<Partition, Integer> boolean_in_characters(int k, const CharacterExpansionOptions& options = {},
                                                   EvaluationReport* report = nullptr);

/// Candidate support used by boolean_in_characters.
std::vector<Partition> character_expansion_support(int k, bool parity_restricted);

/// Cached B_1..B_max_k of lambda (thread-safe).
std::vector<Rational> cached_boolean_cumulants(const Partition& lambda, int max_k);

struct CheckResult {
  std::string group;    // "kerov" or "expansion"
  std::string subject;  // the partition or k under test
  std::string name;
  bool passed = false;
  std::string witness;  // populated on failure
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  std::map<Partition, GradedPolynomial> polynomials;
  std::map<int, std::map<Partition, Integer>> expansions;

  bool all_passed() const;
  std::size_t failures() const;
  std::size_t count(const std::string& group) const;
};

/// Runs the structural checks on P_pi for 1 <= |pi| <= max_pi_size and on
/// the expansions of B_k for 2 <= k <= max_k. Never throws for a failed
/// check; errors during solving become failed entries.
VerificationReport verify_theorems(int max_pi_size, int max_k, const KerovOptions& options = {});

}  // namespace bk
