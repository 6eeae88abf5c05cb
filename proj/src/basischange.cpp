#include "bk/basischange.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <shared_mutex>
#include <sstream>

#include "bk/characters.hpp"
#include "bk/errors.hpp"
#include "bk/linear_solve.hpp"
#include "bk/observables.hpp"

namespace bk {

namespace {

// Hard stop for the size search; real systems reach full rank far earlier.
constexpr int kMaxEvaluationSize = 40;
constexpr int kHeldOutSizes = 2;

void enumerate_into(std::vector<Monomial>& out, Monomial& current, int next_index, int max_index, int weight_left,
                    int degree_left) {
  out.push_back(current);
  if (degree_left == 0) return;
  for (int i = next_index; i <= max_index; ++i) {
    const int w = i - 2;
    if (w > weight_left) break;
    current.push_back(i);
    enumerate_into(out, current, i, max_index, weight_left - w, degree_left - 1);
    current.pop_back();
  }
}

class BooleanCache {
 public:
  std::vector<Rational> get(const Partition& lambda, int max_k) {
    {
      std::shared_lock lock(mutex_);
      auto it = table_.find(lambda);
      if (it != table_.end() && static_cast<int>(it->second.size()) >= max_k)
        return {it->second.begin(), it->second.begin() + max_k};
    }
    auto values = boolean_cumulants(lambda, max_k).values;
    std::unique_lock lock(mutex_);
    auto& slot = table_[lambda];
    if (slot.size() < values.size()) slot = values;
    return values;
  }

 private:
  std::shared_mutex mutex_;
  std::map<Partition, std::vector<Rational>> table_;
};

using RowBuilder = std::function<void(const Partition&, std::vector<Rational>&, Rational&)>;

Rational dot(const std::vector<Rational>& row, const std::vector<Rational>& x) {
  Rational acc;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (!row[i].is_zero() && !x[i].is_zero()) acc += row[i] * x[i];
  }
  return acc;
}

// Feeds all diagrams of size 0, 1, 2, ... until the system has full column
// rank, then checks every remaining row of that size and all diagrams of the
// next two sizes by evaluation.
std::vector<Rational> solve_over_diagrams(std::size_t unknowns, const RowBuilder& build, const std::string& what,
                                          EvaluationReport* report) {
  FractionFreeEliminator elim(unknowns);
  std::vector<Rational> row(unknowns);
  Rational rhs;
  EvaluationReport local;
  local.unknowns = unknowns;
  std::vector<Rational> x;

  auto check_row = [&](const Partition& lambda) {
    build(lambda, row, rhs);
    if (dot(row, x) != rhs) {
      throw InvariantViolation(what + ": held-out diagram " + lambda.str() + " is not satisfied");
    }
    ++local.held_out_rows;
  };

  for (int n = 0; n <= kMaxEvaluationSize; ++n) {
    for (const Partition& lambda : enumerate_partitions(n)) {
      if (!x.empty() || (unknowns == 0 && n > 0)) {
        check_row(lambda);
        continue;
      }
      build(lambda, row, rhs);
      if (elim.add_row(row, rhs) == FractionFreeEliminator::RowResult::Inconsistent) {
        throw InvariantViolation(what + ": evaluation system is inconsistent at diagram " + lambda.str());
      }
      if (elim.full_rank()) x = elim.solve();
    }
    if (!x.empty() || unknowns == 0) {
      local.solved_through_size = n;
      local.pivot_rows = elim.rank();
      for (int h = 1; h <= kHeldOutSizes; ++h) {
        local.held_out_sizes.push_back(n + h);
        for (const Partition& lambda : enumerate_partitions(n + h)) check_row(lambda);
      }
      if (report) *report = local;
      return x;
    }
  }
  throw InvariantViolation(what + ": evaluation matrix never reached full rank");
}

Integer require_integer(const Rational& value, const std::string& what) {
  if (!value.is_integer()) throw InvariantViolation(what + ": non-integral coefficient " + value.str());
  return value.numerator();
}

}  // namespace

MonomialBasis MonomialBasis::enumerate(int max_weighted_degree, int raw_degree_cap, std::optional<int> parity) {
  if (max_weighted_degree < 0 || raw_degree_cap < 0) throw InvalidInput("degree bounds must be non-negative");
  MonomialBasis basis{max_weighted_degree, raw_degree_cap, parity, {}};
  std::vector<Monomial> all;
  Monomial current;
  enumerate_into(all, current, 2, max_weighted_degree + 2, max_weighted_degree, raw_degree_cap);
  for (auto& m : all) {
    if (parity && (index_sum(m) - *parity) % 2 != 0) continue;
    basis.monomials.push_back(std::move(m));
  }
  std::stable_sort(basis.monomials.begin(), basis.monomials.end(),
                   [](const Monomial& a, const Monomial& b) { return a.size() < b.size(); });
  return basis;
}

std::vector<Rational> cached_boolean_cumulants(const Partition& lambda, int max_k) {
  static BooleanCache cache;
  return cache.get(lambda, max_k);
}

GradedPolynomial boolean_kerov_polynomial(const Partition& pi, const KerovOptions& options, EvaluationReport* report) {
  if (pi.empty()) throw InvalidInput("boolean_kerov_polynomial needs a non-empty partition");
  const int d = pi.reflection_degree();
  const int cap = options.raw_degree_cap.value_or(pi.size());
  const MonomialBasis basis = MonomialBasis::enumerate(d, cap);
  const Rational sign = (pi.length() % 2 == 0) ? Rational(1) : Rational(-1);
  const Rational twist(options.twisted_sign);

  RowBuilder build = [&](const Partition& lambda, std::vector<Rational>& row, Rational& rhs) {
    const auto b = cached_boolean_cumulants(lambda, d + 2);
    auto x = [&](int j) { return twist * b[static_cast<std::size_t>(j - 1)]; };
    for (std::size_t c = 0; c < basis.size(); ++c) {
      Rational v(1);
      for (int idx : basis.monomials[c]) v *= x(idx);
      row[c] = v;
    }
    rhs = sign * Rational(normalized_character(pi, lambda));
  };
  const auto solution = solve_over_diagrams(basis.size(), build, "P" + pi.str(), report);

  GradedPolynomial p(VariableFamily::X);
  for (std::size_t c = 0; c < basis.size(); ++c) {
    if (solution[c].is_zero()) continue;
    p.add_term(basis.monomials[c], Rational(require_integer(solution[c], "P" + pi.str())));
  }
  return p;
}

std::vector<Partition> character_expansion_support(int k, bool parity_restricted) {
  if (k < 2) throw InvalidInput("Boolean cumulant expansions start at k = 2");
  std::vector<Partition> support;
  for (const Partition& pi : enumerate_partitions_up_to(k - 1)) {
    const int r = pi.reflection_degree();
    if (r > k - 2) continue;
    if (parity_restricted && (k - r) % 2 != 0) continue;
    support.push_back(pi);
  }
  return support;
}

std::map<Partition, Integer> boolean_in_characters(int k, const CharacterExpansionOptions& options,
                                                   EvaluationReport* report) {
  const auto support = character_expansion_support(k, options.parity_restricted);
  RowBuilder build = [&](const Partition& lambda, std::vector<Rational>& row, Rational& rhs) {
    for (std::size_t c = 0; c < support.size(); ++c) row[c] = Rational(normalized_character(support[c], lambda));
    rhs = cached_boolean_cumulants(lambda, k)[static_cast<std::size_t>(k - 1)];
  };
  const std::string what = "B_" + std::to_string(k);
  const auto solution = solve_over_diagrams(support.size(), build, what, report);
  std::map<Partition, Integer> out;
  for (std::size_t c = 0; c < support.size(); ++c) {
    if (!solution[c].is_zero()) out.emplace(support[c], require_integer(solution[c], what));
  }
  return out;
}

bool VerificationReport::all_passed() const { return failures() == 0; }

std::size_t VerificationReport::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.passed; }));
}

std::size_t VerificationReport::count(const std::string& group) const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [&](const auto& c) { return c.group == group; }));
}

namespace {

void kerov_checks(VerificationReport& report, const Partition& pi, const GradedPolynomial& p) {
  const int d = pi.reflection_degree();
  auto add = [&](std::string name, bool ok, std::string witness) {
    report.checks.push_back(CheckResult{"kerov", pi.str(), std::move(name), ok, ok ? "" : std::move(witness)});
  };
  std::string bad_coeff, bad_support, bad_parity;
  for (const auto& [m, c] : p.terms()) {
    if (!c.is_integer() || c.sign() < 0) bad_coeff = c.str() + "*" + monomial_str(m, VariableFamily::X);
    for (int idx : m) {
      if (idx < 2 || idx > d + 2) bad_support = monomial_str(m, VariableFamily::X);
    }
    if ((index_sum(m) - d) % 2 != 0) bad_parity = monomial_str(m, VariableFamily::X);
  }
  add("non-negative integer coefficients", bad_coeff.empty(), "coefficient " + bad_coeff);
  add("weighted degree <= |pi|-l(pi)", p.max_weighted_degree() <= d,
      "degree " + std::to_string(p.max_weighted_degree()));
  add("variables within x2..x" + std::to_string(d + 2), bad_support.empty(), "monomial " + bad_support);
  const Rational eigen = d % 2 == 0 ? Rational(1) : Rational(-1);
  add("iota eigenvalue (-1)^(|pi|-l(pi))", apply_iota(p) == p * eigen, "monomial " + bad_parity);
  add("non-zero", !p.is_zero(), "zero polynomial");
}

void expansion_checks(VerificationReport& report, int k, const std::map<Partition, Integer>& m) {
  auto add = [&](std::string name, bool ok, std::string witness) {
    report.checks.push_back(
        CheckResult{"expansion", "k=" + std::to_string(k), std::move(name), ok, ok ? "" : std::move(witness)});
  };
  std::string negative, support, parity;
  for (const auto& [pi, c] : m) {
    if (c < 0) negative = pi.str() + ": " + c.get_str();
    if (pi.reflection_degree() > k - 2) support = pi.str();
    if ((pi.reflection_degree() - k) % 2 != 0) parity = pi.str();
  }
  add("non-negative integer coefficients", negative.empty(), negative);
  add("support |pi|-l(pi) <= k-2", support.empty(), support);
  add("parity |pi|-l(pi) = k mod 2", parity.empty(), parity);
  add("non-empty", !m.empty(), "no terms");
}

}  // namespace

VerificationReport verify_theorems(int max_pi_size, int max_k, const KerovOptions& options) {
  VerificationReport report;
  for (int n = 1; n <= max_pi_size; ++n) {
    for (const Partition& pi : enumerate_partitions(n)) {
      try {
        const auto p = boolean_kerov_polynomial(pi, options);
        report.polynomials.emplace(pi, p);
        kerov_checks(report, pi, p);
      } catch (const std::exception& e) {
        report.checks.push_back(CheckResult{"kerov", pi.str(), "solve", false, e.what()});
      }
    }
  }
  for (int k = 2; k <= max_k; ++k) {
    try {
      const auto m = boolean_in_characters(k);
      report.expansions.emplace(k, m);
      expansion_checks(report, k, m);
    } catch (const std::exception& e) {
      report.checks.push_back(CheckResult{"expansion", "k=" + std::to_string(k), "solve", false, e.what()});
    }
  }
  return report;
}

}  // namespace bk
