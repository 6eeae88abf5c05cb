#include "bk/partition.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <numeric>
#include <ostream>
#include <sstream>

#include "bk/errors.hpp"

namespace bk {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw InvalidInput("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw InvalidInput("partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::parse(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (!s.empty() && s.front() == '(') {
    if (s.back() != ')') throw InvalidInput("unbalanced parenthesis in partition '" + std::string(text) + "'");
    s = s.substr(1, s.size() - 2);
  }
  std::vector<int> parts;
  if (s.empty()) return Partition();
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t comma = s.find(',', start);
    const std::string token = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw InvalidInput("bad partition token '" + token + "'");
    }
    parts.push_back(value);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return Partition(std::move(parts));
}

Partition Partition::transpose() const {
  std::vector<int> t;
  if (parts_.empty()) return Partition();
  for (int j = 1; j <= parts_.front(); ++j) {
    int count = 0;
    for (int p : parts_) count += p >= j ? 1 : 0;
    t.push_back(count);
  }
  return Partition(std::move(t));
}

Partition Partition::padded_to(int n) const {
  if (n < size_) throw InvalidInput("cannot pad a partition to a smaller size");
  std::vector<int> p = parts_;
  p.insert(p.end(), static_cast<std::size_t>(n - size_), 1);
  return Partition(std::move(p));
}

std::vector<int> Partition::multiplicities() const {
  std::vector<int> m(parts_.empty() ? 1 : static_cast<std::size_t>(parts_.front()) + 1, 0);
  for (int p : parts_) ++m[static_cast<std::size_t>(p)];
  return m;
}

std::string Partition::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ")";
  return os.str();
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
  if (a.size_ != b.size_) return a.size_ <=> b.size_;
  // Larger parts first in the enumeration order.
  return b.parts_ <=> a.parts_;
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.str(); }

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw InvalidInput("cannot enumerate partitions of a negative integer");
  std::vector<Partition> out;
  std::vector<int> current;
  // Depth-first with parts bounded by the previous part, largest first.
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<Partition> enumerate_partitions_up_to(int max_n) {
  std::vector<Partition> out;
  for (int n = 0; n <= max_n; ++n) {
    auto level = enumerate_partitions(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace bk
