#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "bk/rational.hpp"

namespace bk {

/// Integer partition / Young diagram: weakly decreasing positive parts.
/// The empty partition is valid.
class Partition {
 public:
  Partition() = default;
  /// Throws InvalidInput unless `parts` is weakly decreasing and positive.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Sorts arbitrary positive parts into a partition.
  static Partition from_unsorted(std::vector<int> parts);
  /// Accepts "(a,b,c)", "a,b,c", "()" and "" (whitespace tolerated).
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }

  /// |pi| - l(pi).
  int reflection_degree() const { return size_ - length(); }

  Partition transpose() const;
  /// The partition with n - |pi| extra parts equal to 1.
  Partition padded_to(int n) const;
  /// Multiplicity of each part value, indexed by value (index 0 unused).
  std::vector<int> multiplicities() const;

  /// Text form "(5,3,2,2,1)"; the empty partition prints "()".
  std::string str() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Orders by size, then reverse-lexicographically (so (2) precedes (1,1)).
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

/// All partitions of n in reverse-lexicographic order: (n), (n-1,1), ..., (1^n).
std::vector<Partition> enumerate_partitions(int n);
/// enumerate_partitions(0) ++ ... ++ enumerate_partitions(max_n).
std::vector<Partition> enumerate_partitions_up_to(int max_n);

}  // namespace bk
