#include <algorithm>
#include <functional>
#include <mutex>

#include "bk/errors.hpp"
#include "bk/heiscalc.hpp"

namespace bk {

Permutation canonical_diagram(const Permutation& sigma) {
  std::size_t open_len = 0;
  std::vector<std::size_t> closed;
  for (const auto& cycle : sigma.cycles()) {
    if (cycle.front() == 1) open_len = cycle.size();
    else closed.push_back(cycle.size());
  }
  std::sort(closed.begin(), closed.end(), std::greater<>());
  std::vector<int> images(static_cast<std::size_t>(sigma.degree()));
  int start = 1;
  auto emit = [&](std::size_t len) {
    for (std::size_t i = 0; i < len; ++i) {
      images[static_cast<std::size_t>(start) - 1 + i] = start + static_cast<int>((i + 1) % len);
    }
    start += static_cast<int>(len);
  };
  emit(open_len);
  for (std::size_t len : closed) emit(len);
  return Permutation(std::move(images));
}

namespace {

Permutation curl(const Permutation& sigma, CurlConvention convention) {
  const Permutation shifted = direct_sum(Permutation::identity(1), sigma);
  const Permutation s1 = Permutation::simple_transposition(shifted.degree(), 1);
  return convention == CurlConvention::CrossingAfter ? s1 * shifted : shifted * s1;
}

Permutation extend(const Permutation& sigma, int n) {
  return direct_sum(sigma, Permutation::identity(n - sigma.degree()));
}

// Product of the open sigma-diagram with the closed rho-diagram: the closed
// letters of rho either land on new strands or coincide with one of sigma's
// closed letters 2..p, every partial matching counted once.
void collide(const Permutation& sigma, const Permutation& rho, const Integer& coeff,
             std::map<Permutation, Integer>& out) {
  const int p = sigma.degree();
  const int q = rho.degree();
  std::vector<int> target(static_cast<std::size_t>(q) + 1);
  std::vector<bool> used(static_cast<std::size_t>(p) + 1, false);
  std::function<void(int, int)> assign = [&](int letter, int fresh) {
    if (letter > q) {
      const int n = p + fresh;
      std::vector<int> images(static_cast<std::size_t>(n));
      for (int i = 1; i <= n; ++i) images[static_cast<std::size_t>(i - 1)] = i;
      for (int i = 1; i <= q; ++i) images[static_cast<std::size_t>(target[static_cast<std::size_t>(i)] - 1)] =
          target[static_cast<std::size_t>(rho(i))];
      const Permutation tau = extend(sigma, n) * Permutation(std::move(images));
      out[canonical_diagram(tau)] += coeff;
      return;
    }
    target[static_cast<std::size_t>(letter)] = p + fresh + 1;
    assign(letter + 1, fresh + 1);
    for (int j = 2; j <= p; ++j) {
      if (used[static_cast<std::size_t>(j)]) continue;
      used[static_cast<std::size_t>(j)] = true;
      target[static_cast<std::size_t>(letter)] = j;
      assign(letter + 1, fresh);
      used[static_cast<std::size_t>(j)] = false;
    }
  };
  assign(1, 0);
}

PermDiagramExpansion compute(int k, CurlConvention convention, std::vector<PermDiagramExpansion>& table) {
  // table[j] holds the expansion of the j-dotted strand for j < k.
  for (int n = static_cast<int>(table.size()); n <= k; ++n) {
    PermDiagramExpansion e;
    if (n == 0) {
      e.terms[Permutation::identity(1)] = 1;
    } else {
      for (const auto& [sigma, m] : table[static_cast<std::size_t>(n - 1)].terms)
        e.terms[canonical_diagram(curl(sigma, convention))] += m;
      for (int b = 0; b <= n - 2; ++b) {
        const auto& open = table[static_cast<std::size_t>(b)].terms;
        const auto& closed = table[static_cast<std::size_t>(n - 2 - b)].terms;
        for (const auto& [sigma, ms] : open)
          for (const auto& [rho, mr] : closed) collide(sigma, rho, ms * mr, e.terms);
      }
    }
    std::erase_if(e.terms, [](const auto& kv) { return kv.second == 0; });
    for (const auto& [sigma, m] : e.terms) {
      if (m < 0) throw InvariantViolation("dotted strand " + std::to_string(n) + ": negative coefficient on " + sigma.str());
    }
    table.push_back(std::move(e));
  }
  return table[static_cast<std::size_t>(k)];
}

}  // namespace

PermDiagramExpansion expand_dotted_strand(int k, CurlConvention convention) {
  if (k < 0) throw InvalidInput("dot counts must be non-negative");
  if (convention != CurlConvention::CrossingAfter) {
    std::vector<PermDiagramExpansion> scratch;
    return compute(k, convention, scratch);
  }
  static std::mutex mutex;
  static std::vector<PermDiagramExpansion> table;
  std::lock_guard lock(mutex);
  return compute(k, convention, table);
}

std::map<Partition, Integer> aggregate_by_cycle_type(const PermDiagramExpansion& e) {
  std::map<Partition, Integer> out;
  for (const auto& [sigma, m] : e.terms) out[cycle_type(sigma).partition] += m;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

}  // namespace bk
