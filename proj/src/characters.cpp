#include "bk/characters.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "bk/errors.hpp"

namespace bk {

namespace {

using Key = std::pair<std::vector<int>, std::vector<int>>;

class CharacterMemo {
 public:
  std::optional<Integer> find(const Key& key) const {
    std::shared_lock lock(mutex_);
    auto it = table_.find(key);
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }

  void store(Key key, const Integer& value) {
    std::unique_lock lock(mutex_);
    table_.emplace(std::move(key), value);
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<Key, Integer> table_;
};

CharacterMemo& memo() {
  static CharacterMemo instance;
  return instance;
}

// Shapes reachable by removing a border strip of the given length, with the
// strip's height sign. Works on first-column hook lengths (beta numbers).
std::vector<std::pair<std::vector<int>, int>> remove_border_strips(const std::vector<int>& parts, int length) {
  const int rows = static_cast<int>(parts.size());
  std::vector<int> beta(parts.size());
  for (int i = 0; i < rows; ++i) beta[static_cast<std::size_t>(i)] = parts[static_cast<std::size_t>(i)] + rows - 1 - i;
  std::vector<std::pair<std::vector<int>, int>> out;
  for (int i = 0; i < rows; ++i) {
    const int from = beta[static_cast<std::size_t>(i)];
    const int to = from - length;
    if (to < 0 || std::find(beta.begin(), beta.end(), to) != beta.end()) continue;
    int between = 0;
    for (int b : beta) between += (b > to && b < from) ? 1 : 0;
    std::vector<int> moved = beta;
    moved[static_cast<std::size_t>(i)] = to;
    std::sort(moved.begin(), moved.end(), std::greater<>());
    std::vector<int> shape;
    for (int r = 0; r < rows; ++r) {
      const int part = moved[static_cast<std::size_t>(r)] - (rows - 1 - r);
      if (part > 0) shape.push_back(part);
    }
    out.emplace_back(std::move(shape), between % 2 == 0 ? 1 : -1);
  }
  return out;
}

// Class parts are consumed from the front (largest first).
Integer mn_recursive(const std::vector<int>& shape, const std::vector<int>& classes) {
  if (classes.empty()) return shape.empty() ? Integer(1) : Integer(0);
  Key key{shape, classes};
  if (auto hit = memo().find(key)) return *hit;
  const std::vector<int> rest(classes.begin() + 1, classes.end());
  Integer total = 0;
  for (const auto& [smaller, sgn] : remove_border_strips(shape, classes.front())) {
    const Integer sub = mn_recursive(smaller, rest);
    if (sgn > 0) {
      total += sub;
    } else {
      total -= sub;
    }
  }
  memo().store(std::move(key), total);
  return total;
}

}  // namespace

Integer mn_character_unnormalized(const Partition& lambda, const Partition& pi) {
  if (lambda.size() != pi.size()) throw InvalidInput("character of " + lambda.str() + " at class " + pi.str() + ": size mismatch");
  return mn_recursive(lambda.parts(), pi.parts());
}

Integer mn_dimension(const Partition& lambda) {
  return mn_recursive(lambda.parts(), std::vector<int>(static_cast<std::size_t>(lambda.size()), 1));
}

Rational mn_character(const Partition& lambda, const Partition& pi) {
  const Integer value = mn_character_unnormalized(lambda, pi);
  return Rational(value, mn_dimension(lambda));
}

Integer normalized_character(const Partition& pi, const Partition& lambda) {
  const int n = lambda.size();
  const int k = pi.size();
  if (n < k) return 0;
  const Rational value = Rational(falling_factorial(static_cast<unsigned>(n), static_cast<unsigned>(k))) *
                         mn_character(lambda, pi.padded_to(n));
  if (!value.is_integer()) {
    throw InvariantViolation("Sigma_" + pi.str() + "(" + lambda.str() + ") = " + value.str() + " is not an integer");
  }
  return value.numerator();
}

}  // namespace bk
