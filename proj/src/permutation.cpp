#include "bk/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "bk/errors.hpp"

namespace bk {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (int v : images_) {
    if (v < 1 || v > degree() || seen[static_cast<std::size_t>(v)]) {
      throw InvalidInput("permutation images must form a bijection of 1..n");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw InvalidInput("negative permutation degree");
  std::vector<int> im(static_cast<std::size_t>(n));
  std::iota(im.begin(), im.end(), 1);
  Permutation p;
  p.images_ = std::move(im);
  return p;
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  Permutation p = identity(n);
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const int from = cycle[i];
      if (from < 1 || from > n || used[static_cast<std::size_t>(from)]) {
        throw InvalidInput("cycles must be disjoint and within 1..n");
      }
      used[static_cast<std::size_t>(from)] = true;
      p.images_[static_cast<std::size_t>(from - 1)] = cycle[(i + 1) % cycle.size()];
    }
  }
  return p;
}

Permutation Permutation::simple_transposition(int n, int i) {
  if (i < 1 || i >= n) throw InvalidInput("simple transposition index out of range");
  return from_cycles(n, {{i, i + 1}});
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size() + 1, false);
  for (int start = 1; start <= degree(); ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> cycle;
    for (int x = start; !seen[static_cast<std::size_t>(x)]; x = (*this)(x)) {
      seen[static_cast<std::size_t>(x)] = true;
      cycle.push_back(x);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string Permutation::str() const {
  std::ostringstream os;
  bool any = false;
  for (const auto& c : cycles()) {
    if (c.size() < 2) continue;
    any = true;
    os << "(";
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
    os << ")";
  }
  if (!any) os << "e";
  os << "[S" << degree() << "]";
  return os.str();
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw InvalidInput("composing permutations of different degrees");
  std::vector<int> im(a.images_.size());
  for (std::size_t i = 0; i < im.size(); ++i) im[i] = a.images_[static_cast<std::size_t>(b.images_[i] - 1)];
  Permutation p;
  p.images_ = std::move(im);
  return p;
}

Permutation direct_sum(const Permutation& a, const Permutation& b) {
  std::vector<int> im = a.images();
  for (int v : b.images()) im.push_back(v + a.degree());
  return Permutation(std::move(im));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  std::vector<int> im(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(im.begin(), im.end(), 1);
  do {
    out.emplace_back(im);
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

CycleType cycle_type(const Permutation& sigma) {
  std::vector<int> lengths;
  for (const auto& c : sigma.cycles()) lengths.push_back(static_cast<int>(c.size()));
  return CycleType{Partition::from_unsorted(std::move(lengths)), sigma.degree()};
}

int reflection_length(const Permutation& sigma) {
  return sigma.degree() - static_cast<int>(sigma.cycles().size());
}

int sign(const Permutation& sigma) { return reflection_length(sigma) % 2 == 0 ? 1 : -1; }

Integer centralizer_order(const Partition& pi) {
  Integer z = 1;
  const auto mult = pi.multiplicities();
  for (std::size_t m = 1; m < mult.size(); ++m) {
    if (mult[m] == 0) continue;
    Integer power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(mult[m]));
    z *= power * factorial(static_cast<unsigned>(mult[m]));
  }
  return z;
}

Integer conjugacy_class_size(const CycleType& type) {
  if (type.partition.size() != type.ambient) throw InvalidInput("cycle type size differs from ambient degree");
  return factorial(static_cast<unsigned>(type.ambient)) / centralizer_order(type.partition);
}

}  // namespace bk
