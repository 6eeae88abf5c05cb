#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bk/graded_polynomial.hpp"
#include "bk/partition.hpp"
#include "bk/permutation.hpp"
#include "bk/rational.hpp"

namespace bk {

/// Element of the center: a polynomial in the clockwise dotted bubbles
/// c_0, c_1, ... (VariableFamily::C, weight of c_i is i).
using CenterElement = GradedPolynomial;

/// A closed dotted bubble floating between strand arcs.
struct Bubble {
  int dots = 0;
  /// 0 = inside the innermost arc, p = between arc p and arc p+1 (one-indexed
  /// from the inside), m = outside all m arcs.
  int position = 0;

  friend auto operator<=>(const Bubble&, const Bubble&) = default;
};

/// One basis configuration: m nested arcs with dot counts (innermost first)
/// and a multiset of bubbles (kept sorted).
struct Configuration {
  std::vector<int> arcs;
  std::vector<Bubble> bubbles;

  void normalize() { std::sort(bubbles.begin(), bubbles.end()); }
  std::string str() const;
  friend auto operator<=>(const Configuration&, const Configuration&) = default;
};

/// Formal integer combination of configurations.
class DiagramState {
 public:
  using TermMap = std::map<Configuration, Integer>;

  DiagramState() = default;
  static DiagramState single(Configuration c, const Integer& coeff = 1);

  void add(Configuration c, const Integer& coeff);
  const TermMap& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  Integer coefficient(const Configuration& c) const;
  std::string str() const;

  friend bool operator==(const DiagramState&, const DiagramState&) = default;

 private:
  TermMap terms_;
};

/// One application of the bubble-crossing relation to a strand (m = 1) with a
/// k-dotted bubble on its right (position 0):
///   +[k-bubble left] - (k+1)[strand^k] + sum_{b<=k-2} (b+1)[strand^b, (k-2-b)-bubble right].
DiagramState bubble_move_step(int k);

/// The fully reduced move of a right k-bubble across one strand:
///   sum m_ij [left i-bubble, strand^j] - sum n_l [strand^l].
struct BubbleMove {
  std::map<std::pair<int, int>, Integer> m;
  std::map<int, Integer> n;

  /// The same relation as a one-strand DiagramState.
  DiagramState as_state() const;
};

/// Memoised; coefficients are non-negative for every k (asserted).
const BubbleMove& bubble_move_full(int k);

enum class ExtractionSchedule {
  InnermostFirst,  // always advance the innermost non-outside bubble
  OutermostFirst,  // always advance the outermost non-outside bubble
};

struct ReduceOptions {
  ExtractionSchedule schedule = ExtractionSchedule::InnermostFirst;
  /// Dots created by resolving the innermost curl (1 in the correct
  /// relation; 0 only for sensitivity tests).
  int curl_dot_shift = 1;
};

/// alpha_pi(dots) as an element of the center, by the curl/bubble recursion.
/// dots lists the strand dot counts, strand 1 (outermost) first.
CenterElement alpha_in_center(const Partition& pi, const std::vector<int>& dots, const ReduceOptions& options = {});

/// P_{pi,dots}(y_0, y_1, ...) with (-1)^{l(pi)} alpha_pi(dots) = P(-c_0, -c_1, ...).
/// Non-negative integer coefficients are asserted (InvariantViolation).
GradedPolynomial reduce_alpha(const Partition& pi, const std::vector<int>& dots, const ReduceOptions& options = {});

/// y_j -> x_{j+2}.
GradedPolynomial y_to_x(const GradedPolynomial& p);

/// Substitutes c_k -> B_{k+2}(lambda).
Rational evaluate_center(const CenterElement& e, const Partition& lambda);

/// Value of a one-strand configuration when the strand adds the box of
/// content x to mu: strand dots give x^d, bubbles on the right (position 0)
/// evaluate at mu and bubbles on the left at mu + box.
Rational evaluate_strand_configuration(const Configuration& c, const Partition& mu, long x);
Rational evaluate_strand_state(const DiagramState& s, const Partition& mu, long x);

/// Closes the strand: sum over addable boxes of the transition-measure
/// weight times the pointwise value.
Rational evaluate_closed_strand(const DiagramState& s, const Partition& mu);

/// Canonical representative of a sigma-diagram (strand 1 open, strands 2..n
/// closed): the cycle through 1 becomes (1 2 ... a) and the remaining cycles
/// follow in decreasing length on consecutive letters.
Permutation canonical_diagram(const Permutation& sigma);

/// Expansion of the k-dotted strand over sigma-diagrams, keys canonical.
struct PermDiagramExpansion {
  std::map<Permutation, Integer> terms;

  std::size_t size() const { return terms.size(); }
};

enum class CurlConvention {
  CrossingAfter,   // s_1 o (1 + sigma)
  CrossingBefore,  // (1 + sigma) o s_1
};

/// Memoised for the default convention.
PermDiagramExpansion expand_dotted_strand(int k, CurlConvention convention = CurlConvention::CrossingAfter);

/// m^{k+2}_pi = sum of m_sigma over sigma of cycle type pi.
std::map<Partition, Integer> aggregate_by_cycle_type(const PermDiagramExpansion& e);

}  // namespace bk
