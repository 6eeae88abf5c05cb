#pragma once

#include <compare>
#include <string>
#include <vector>

#include "bk/partition.hpp"
#include "bk/rational.hpp"

namespace bk {

/// Bijection of {1, ..., n}, stored as its image list.
class Permutation {
 public:
  Permutation() = default;  // identity of S_0
  /// images[i-1] = sigma(i); throws InvalidInput unless a bijection.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  /// Product of disjoint cycles in one-line cycle notation, e.g. {{1,2,3},{4,5}}.
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);
  /// The simple transposition (i i+1) in S_n.
  static Permutation simple_transposition(int n, int i);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  /// Cycles (including fixed points), each starting at its smallest letter,
  /// ordered by that letter.
  std::vector<std::vector<int>> cycles() const;
  std::string str() const;

  /// Composition: (a * b)(i) = a(b(i)). Degrees must agree.
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) return a.degree() <=> b.degree();
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<int> images_;
};

/// Block sum: a acts on 1..p, b on p+1..p+q.
Permutation direct_sum(const Permutation& a, const Permutation& b);

/// Every element of S_n in lexicographic order of image lists.
std::vector<Permutation> all_permutations(int n);

/// Cycle lengths of a permutation of n letters, fixed points included.
struct CycleType {
  Partition partition;
  int ambient = 0;

  friend bool operator==(const CycleType&, const CycleType&) = default;
};

CycleType cycle_type(const Permutation& sigma);
/// |pi| - l(pi) for pi the cycle type: the minimal number of (arbitrary)
/// transpositions whose product is sigma.
int reflection_length(const Permutation& sigma);
int sign(const Permutation& sigma);

/// n! / z_pi with z_pi = prod_m m^{a_m} a_m!.
Integer conjugacy_class_size(const CycleType& type);
Integer centralizer_order(const Partition& pi);

}  // namespace bk
