#include "bk/heiscalc.hpp"

#include <mutex>
#include <optional>
#include <shared_mutex>
#include <sstream>
#include <tuple>

#include "bk/basischange.hpp"
#include "bk/errors.hpp"
#include "bk/observables.hpp"

namespace bk {

std::string Configuration::str() const {
  std::ostringstream os;
  os << "arcs[";
  for (std::size_t i = 0; i < arcs.size(); ++i) os << (i ? "," : "") << arcs[i];
  os << "]";
  for (const auto& b : bubbles) os << " c" << b.dots << "@" << b.position;
  return os.str();
}

DiagramState DiagramState::single(Configuration c, const Integer& coeff) {
  DiagramState s;
  s.add(std::move(c), coeff);
  return s;
}

void DiagramState::add(Configuration c, const Integer& coeff) {
  if (coeff == 0) return;
  c.normalize();
  auto [it, inserted] = terms_.emplace(std::move(c), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer DiagramState::coefficient(const Configuration& c) const {
  Configuration key = c;
  key.normalize();
  auto it = terms_.find(key);
  return it == terms_.end() ? Integer(0) : it->second;
}

std::string DiagramState::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [c, k] : terms_) {
    if (!first) os << " + ";
    os << k.get_str() << "*{" << c.str() << "}";
    first = false;
  }
  return os.str();
}

DiagramState bubble_move_step(int k) {
  if (k < 0) throw InvalidInput("dot counts must be non-negative");
  DiagramState s;
  s.add(Configuration{{0}, {Bubble{k, 1}}}, 1);
  s.add(Configuration{{k}, {}}, -(k + 1));
  for (int b = 0; b <= k - 2; ++b) s.add(Configuration{{b}, {Bubble{k - 2 - b, 0}}}, b + 1);
  return s;
}

DiagramState BubbleMove::as_state() const {
  DiagramState s;
  for (const auto& [ij, coeff] : m) s.add(Configuration{{ij.second}, {Bubble{ij.first, 1}}}, coeff);
  for (const auto& [l, coeff] : n) s.add(Configuration{{l}, {}}, -coeff);
  return s;
}

namespace {

BubbleMove compute_bubble_move(int k) {
  // Residual right bubbles lose at least two dots per step, so this loop ends.
  std::map<Configuration, Integer> pending = bubble_move_step(k).terms();
  DiagramState done;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const Configuration& c = node.key();
    const bool right = !c.bubbles.empty() && c.bubbles.front().position == 0;
    if (!right) {
      done.add(c, node.mapped());
      continue;
    }
    const DiagramState step = bubble_move_step(c.bubbles.front().dots);
    for (const auto& [sub, coeff] : step.terms()) {
      Configuration next = sub;
      next.arcs[0] += c.arcs[0];
      next.normalize();
      auto& slot = pending[next];
      slot += coeff * node.mapped();
      if (slot == 0) pending.erase(next);
    }
  }
  BubbleMove move;
  for (const auto& [c, coeff] : done.terms()) {
    if (c.bubbles.empty()) {
      move.n[c.arcs[0]] = -coeff;
    } else {
      move.m[{c.bubbles.front().dots, c.arcs[0]}] = coeff;
    }
  }
  for (const auto& [ij, coeff] : move.m) {
    if (coeff < 0) throw InvariantViolation("bubble move produced a negative m coefficient at k=" + std::to_string(k));
  }
  for (const auto& [l, coeff] : move.n) {
    if (coeff < 0) throw InvariantViolation("bubble move produced a negative n coefficient at k=" + std::to_string(k));
  }
  return move;
}

template <typename Key, typename Value>
class Memo {
 public:
  const Value* find(const Key& key) const {
    std::shared_lock lock(mutex_);
    auto it = table_.find(key);
    return it == table_.end() ? nullptr : &it->second;
  }
  const Value& store(const Key& key, Value value) {
    std::unique_lock lock(mutex_);
    return table_.emplace(key, std::move(value)).first->second;
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<Key, Value> table_;  // node-based: references stay valid
};

}  // namespace

const BubbleMove& bubble_move_full(int k) {
  if (k < 0) throw InvalidInput("dot counts must be non-negative");
  static Memo<int, BubbleMove> memo;
  if (const auto* hit = memo.find(k)) return *hit;
  return memo.store(k, compute_bubble_move(k));
}

namespace {

CenterElement c_variable(int i) { return GradedPolynomial::variable(VariableFamily::C, i); }

CenterElement alpha_impl(const Partition& pi, const std::vector<int>& dots, const ReduceOptions& options);

// Index of the bubble to move next, or -1 when every bubble is outside.
int pick_bubble(const Configuration& c, ExtractionSchedule schedule) {
  const int outside = static_cast<int>(c.arcs.size());
  int best = -1;
  for (int i = 0; i < static_cast<int>(c.bubbles.size()); ++i) {
    const int p = c.bubbles[static_cast<std::size_t>(i)].position;
    if (p >= outside) continue;
    if (best < 0) {
      best = i;
      continue;
    }
    const int bp = c.bubbles[static_cast<std::size_t>(best)].position;
    if (schedule == ExtractionSchedule::InnermostFirst ? p < bp : p > bp) best = i;
  }
  return best;
}

// Moves every bubble outside the nested arcs, then closes the arcs through
// the box `box`: each final configuration becomes prod c_j * alpha_box(arcs).
CenterElement extract_and_close(const DiagramState& state, const Partition& box, const ReduceOptions& options) {
  std::map<Configuration, Integer> pending = state.terms();
  CenterElement result(VariableFamily::C);
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const Configuration& c = node.key();
    const Integer& coeff = node.mapped();
    const int which = pick_bubble(c, options.schedule);
    if (which < 0) {
      std::vector<int> strand_dots(c.arcs.rbegin(), c.arcs.rend());
      Monomial outside;
      for (const auto& b : c.bubbles) outside.push_back(b.dots);
      CenterElement term = GradedPolynomial::monomial(VariableFamily::C, outside, Rational(coeff));
      result += term * alpha_impl(box, strand_dots, options);
      continue;
    }
    const Bubble bubble = c.bubbles[static_cast<std::size_t>(which)];
    const auto arc = static_cast<std::size_t>(bubble.position);
    const BubbleMove& move = bubble_move_full(bubble.dots);
    auto push = [&](Configuration next, const Integer& k) {
      next.normalize();
      auto& slot = pending[next];
      slot += k;
      if (slot == 0) pending.erase(next);
    };
    Configuration rest = c;
    rest.bubbles.erase(rest.bubbles.begin() + which);
    for (const auto& [ij, m] : move.m) {
      Configuration next = rest;
      next.arcs[arc] += ij.second;
      next.bubbles.push_back(Bubble{ij.first, bubble.position + 1});
      push(std::move(next), coeff * m);
    }
    for (const auto& [l, n] : move.n) {
      Configuration next = rest;
      next.arcs[arc] += l;
      push(std::move(next), -coeff * n);
    }
  }
  return result;
}

using AlphaKey = std::tuple<std::vector<int>, std::vector<int>, int, int>;

CenterElement alpha_uncached(const Partition& pi, const std::vector<int>& dots, const ReduceOptions& options) {
  if (pi.empty()) return GradedPolynomial::constant(VariableFamily::C, 1);
  if (pi.size() == 1) return c_variable(dots[0]);
  const int len = pi.length();
  if (len == 1) {
    // Resolve the innermost curl: the last two strands merge.
    const int n = pi.size() - 1;
    const Partition smaller{n};
    std::vector<int> head(dots.begin(), dots.begin() + (n - 1));
    const int i_n = dots[static_cast<std::size_t>(n - 1)];
    const int i_last = dots[static_cast<std::size_t>(n)];
    std::vector<int> merged = head;
    merged.push_back(i_n + i_last + options.curl_dot_shift);
    CenterElement result = alpha_impl(smaller, merged, options);
    DiagramState bubbles;
    for (int b = 0; b < i_last; ++b) {
      std::vector<int> strand = head;
      strand.push_back(i_n + i_last - b - 1);
      bubbles.add(Configuration{{strand.rbegin(), strand.rend()}, {Bubble{b, 0}}}, 1);
    }
    result -= extract_and_close(bubbles, smaller, options);
    return result;
  }
  // Reduce the innermost block, then carry its bubbles out through the rest.
  const int last = pi[static_cast<std::size_t>(len - 1)];
  const Partition outer(std::vector<int>(pi.parts().begin(), pi.parts().end() - 1));
  const auto split = dots.begin() + outer.size();
  const CenterElement inner = alpha_impl(Partition{last}, std::vector<int>(split, dots.end()), options);
  const std::vector<int> arcs(std::make_reverse_iterator(split), dots.rend());
  DiagramState state;
  for (const auto& [mono, coeff] : inner.terms()) {
    Configuration c{arcs, {}};
    for (int j : mono) c.bubbles.push_back(Bubble{j, 0});
    state.add(std::move(c), coeff.to_integer());
  }
  return extract_and_close(state, outer, options);
}

CenterElement alpha_impl(const Partition& pi, const std::vector<int>& dots, const ReduceOptions& options) {
  static Memo<AlphaKey, CenterElement> memo;
  const AlphaKey key{pi.parts(), dots, static_cast<int>(options.schedule), options.curl_dot_shift};
  if (const auto* hit = memo.find(key)) return *hit;
  return memo.store(key, alpha_uncached(pi, dots, options));
}

}  // namespace

CenterElement alpha_in_center(const Partition& pi, const std::vector<int>& dots, const ReduceOptions& options) {
  if (static_cast<int>(dots.size()) != pi.size()) throw InvalidInput("need one dot count per strand of " + pi.str());
  for (int d : dots) {
    if (d < 0) throw InvalidInput("dot counts must be non-negative");
  }
  return alpha_impl(pi, dots, options);
}

GradedPolynomial reduce_alpha(const Partition& pi, const std::vector<int>& dots, const ReduceOptions& options) {
  const CenterElement alpha = alpha_in_center(pi, dots, options);
  GradedPolynomial p(VariableFamily::Y);
  const bool odd_length = pi.length() % 2 != 0;
  for (const auto& [mono, coeff] : alpha.terms()) {
    const bool flip = odd_length != (mono.size() % 2 != 0);
    const Rational c = flip ? -coeff : coeff;
    if (!c.is_integer() || c.sign() < 0) {
      throw InvariantViolation("reduce_alpha" + pi.str() + ": coefficient " + c.str() + " on " +
                               monomial_str(mono, VariableFamily::Y) + " is not a non-negative integer");
    }
    p.add_term(mono, c);
  }
  return p;
}

GradedPolynomial y_to_x(const GradedPolynomial& p) { return p.relabel(VariableFamily::X, [](int j) { return j + 2; }); }

Rational evaluate_center(const CenterElement& e, const Partition& lambda) {
  const int top = e.max_index();
  if (top < 0) return e.coefficient({});
  const auto b = cached_boolean_cumulants(lambda, top + 2);
  return e.evaluate([&](int k) { return b[static_cast<std::size_t>(k + 1)]; });
}

namespace {

Partition add_box(const Partition& mu, long content) {
  std::vector<int> parts = mu.parts();
  for (int row = 1; row <= mu.length() + 1; ++row) {
    const int len = row <= mu.length() ? parts[static_cast<std::size_t>(row - 1)] : 0;
    const bool addable = row == 1 || parts[static_cast<std::size_t>(row - 2)] > len;
    if (addable && len + 1 - row == content) {
      if (row > mu.length()) parts.push_back(1);
      else ++parts[static_cast<std::size_t>(row - 1)];
      return Partition(parts);
    }
  }
  throw InvalidInput("no addable box of content " + std::to_string(content) + " in " + mu.str());
}

Rational bubble_value(int dots, const Partition& lambda) {
  return cached_boolean_cumulants(lambda, dots + 2)[static_cast<std::size_t>(dots + 1)];
}

}  // namespace

Rational evaluate_strand_configuration(const Configuration& c, const Partition& mu, long x) {
  if (c.arcs.size() != 1) throw InvalidInput("strand evaluation needs exactly one strand");
  Rational v = pow(Rational(x), static_cast<unsigned>(c.arcs[0]));
  std::optional<Partition> grown;
  for (const auto& b : c.bubbles) {
    if (b.position == 0) {
      v *= bubble_value(b.dots, mu);
    } else {
      if (!grown) grown = add_box(mu, x);
      v *= bubble_value(b.dots, *grown);
    }
  }
  return v;
}

Rational evaluate_strand_state(const DiagramState& s, const Partition& mu, long x) {
  Rational total;
  for (const auto& [c, k] : s.terms()) total += Rational(k) * evaluate_strand_configuration(c, mu, x);
  return total;
}

Rational evaluate_closed_strand(const DiagramState& s, const Partition& mu) {
  Rational total;
  for (const auto& atom : transition_measure(mu).atoms) total += atom.weight * evaluate_strand_state(s, mu, atom.location);
  return total;
}

}  // namespace bk
