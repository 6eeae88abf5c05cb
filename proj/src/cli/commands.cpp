#include "bk/cli/commands.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "bk/basischange.hpp"
#include "bk/characters.hpp"
#include "bk/cli/result_cache.hpp"
#include "bk/errors.hpp"
#include "bk/heiscalc.hpp"
#include "bk/observables.hpp"
#include "bk/permutation.hpp"

namespace bk::cli {

namespace {

json values_json(const std::vector<Rational>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(to_json(v));
  return out;
}

int iota_eigenvalue(const GradedPolynomial& p) {
  const GradedPolynomial image = apply_iota(p);
  if (image == p) return 1;
  if (image == p * Rational(-1)) return -1;
  return 0;
}

Table kerov_skeleton(int max_pi_size) {
  Table t;
  t.command = "kerov-boolean";
  t.params = json{{"max_pi_size", max_pi_size}};
  t.columns = {{"pi", CellKind::Partition},
               {"polynomial", CellKind::Polynomial, VariableFamily::X},
               {"degree", CellKind::Plain},
               {"iota", CellKind::Plain},
               {"agreement", CellKind::YesNo}};
  return t;
}

Table expand_skeleton(int max_k) {
  Table t;
  t.command = "expand-boolean";
  t.params = json{{"max_k", max_k}};
  t.columns = {{"k", CellKind::Plain},
               {"expansion", CellKind::Expansion},
               {"support", CellKind::YesNo},
               {"parity", CellKind::YesNo},
               {"agreement", CellKind::YesNo}};
  return t;
}

}  // namespace

Table observables_table(const Partition& lambda, const std::string& kind, int max_k) {
  Table t;
  t.command = "observables";
  t.params = json{{"lambda", to_json(lambda)}, {"kind", kind}};
  if (kind == "profile") {
    const Profile p = profile_coordinates(lambda);
    t.columns = {{"minima", CellKind::List}, {"maxima", CellKind::List}};
    t.rows.push_back(json{{"minima", p.minima}, {"maxima", p.maxima}});
    t.layout = TextLayout::Labeled;
    return t;
  }
  if (max_k < 0) throw InvalidInput("--max-k must be non-negative");
  t.params["max_k"] = max_k;
  ObservableVector v;
  if (kind == "moment") v = moments(lambda, max_k);
  else if (kind == "boolean") v = boolean_cumulants(lambda, max_k);
  else if (kind == "twisted-boolean") v = twisted_boolean_cumulants(lambda, max_k);
  else if (kind == "free") v = free_cumulants(lambda, max_k);
  else throw InvalidInput("unknown observable kind '" + kind + "'");
  t.columns = {{"values", CellKind::List}};
  t.rows.push_back(json{{"values", values_json(v.values)}});
  t.layout = TextLayout::Bare;
  return t;
}

RouteTable kerov_boolean_table(int max_pi_size) {
  if (max_pi_size < 1) throw InvalidInput("--max-pi-size must be at least 1");
  RouteTable out;
  out.table = kerov_skeleton(max_pi_size);
  Table& t = out.table;
  for (const Partition& pi : enumerate_partitions_up_to(max_pi_size)) {
    if (pi.empty()) continue;
    const GradedPolynomial p = boolean_kerov_polynomial(pi);
    const GradedPolynomial q = y_to_x(reduce_alpha(pi, std::vector<int>(static_cast<std::size_t>(pi.size()), 0)));
    const bool agree = p == q;
    if (!agree) {
      out.routes_agree = false;
      out.diff += pi.str() + ": solver " + p.str() + " vs diagrammatic " + q.str() + "\n";
    }
    t.rows.push_back(json{{"pi", to_json(pi)},
                          {"polynomial", to_json(p)},
                          {"degree", p.max_weighted_degree()},
                          {"iota", iota_eigenvalue(p)},
                          {"agreement", agree}});
  }
  return out;
}

RouteTable expand_boolean_table(int max_k) {
  if (max_k < 2) throw InvalidInput("--max-k must be at least 2");
  RouteTable out;
  out.table = expand_skeleton(max_k);
  Table& t = out.table;
  for (int k = 2; k <= max_k; ++k) {
    const auto m = boolean_in_characters(k);
    const auto diagrammatic = aggregate_by_cycle_type(expand_dotted_strand(k - 2));
    bool support = true, parity = true;
    for (const auto& [pi, c] : m) {
      support = support && pi.reflection_degree() <= k - 2 && c > 0;
      parity = parity && (k - pi.reflection_degree()) % 2 == 0;
    }
    const bool agree = m == diagrammatic;
    if (!agree) {
      out.routes_agree = false;
      out.diff += "k=" + std::to_string(k) + ": solver " + cell_text(t.columns[1], expansion_to_json(m)) +
                  " vs diagrammatic " + cell_text(t.columns[1], expansion_to_json(diagrammatic)) + "\n";
    }
    t.rows.push_back(json{{"k", k},
                          {"expansion", expansion_to_json(m)},
                          {"support", support},
                          {"parity", parity},
                          {"agreement", agree}});
  }
  return out;
}

Mutation parse_mutation(const std::string& name) {
  if (name.empty() || name == "none") return Mutation::None;
  if (name == "flip-twisted-sign") return Mutation::FlipTwistedSign;
  if (name == "drop-curl-dot") return Mutation::DropCurlDot;
  throw InvalidInput("unknown mutation '" + name + "'");
}

VerifyConfig VerifyConfig::quick() { return VerifyConfig{"quick", 6, 4, 4, 4, 6, 4, 3, Mutation::None}; }

VerifyConfig VerifyConfig::full() { return VerifyConfig{"full", 10, 6, 8, 5, 8, 8, 4, Mutation::None}; }

namespace {

class CheckLog {
 public:
  void add(const std::string& group, const std::string& subject, const std::string& name, bool ok,
           const std::string& witness = "") {
    json entry{{"group", group}, {"subject", subject}, {"check", name}, {"passed", ok}};
    if (!ok) entry["witness"] = witness;
    checks_.push_back(std::move(entry));
    auto& g = groups_[group];
    g.first += 1;
    g.second += ok ? 0 : 1;
  }

  // Runs body; an exception becomes a failed check carrying its message.
  void guarded(const std::string& group, const std::string& subject, const std::string& name,
               const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      add(group, subject, name, false, e.what());
    }
  }

  VerifyOutcome finish(const std::string& profile) const {
    VerifyOutcome out;
    json groups = json::object();
    for (const auto& [name, counts] : groups_) {
      groups[name] = json{{"checks", counts.first}, {"failures", counts.second}};
      out.summary.push_back(name + ": " + std::to_string(counts.first - counts.second) + "/" +
                            std::to_string(counts.first) + " passed");
      out.passed = out.passed && counts.second == 0;
    }
    out.report = json{{"schema_version", kSchemaVersion},
                      {"profile", profile},
                      {"passed", out.passed},
                      {"groups", groups},
                      {"checks", checks_}};
    return out;
  }

 private:
  json checks_ = json::array();
  std::map<std::string, std::pair<int, int>> groups_;
};

void observable_suite(CheckLog& log, int max_n) {
  constexpr int kOrder = 12;
  for (const Partition& lambda : enumerate_partitions_up_to(max_n)) {
    const std::string s = lambda.str();
    const Profile p = profile_coordinates(lambda);
    bool interlace = p.minima.size() == p.maxima.size() + 1;
    for (std::size_t i = 0; interlace && i < p.maxima.size(); ++i)
      interlace = p.minima[i] < p.maxima[i] && p.maxima[i] < p.minima[i + 1];
    log.add("observables", s, "interlacing", interlace);
    long sx = 0, sy = 0;
    for (long x : p.minima) sx += x;
    for (long y : p.maxima) sy += y;
    log.add("observables", s, "sum of minima equals sum of maxima", sx == sy);
    Rational total;
    bool positive = true;
    for (const auto& a : transition_measure(lambda).atoms) {
      total += a.weight;
      positive = positive && a.weight.sign() > 0;
    }
    log.add("observables", s, "transition weights positive, total 1", positive && total == Rational(1));
    const auto m = moments(lambda, kOrder);
    const auto b = boolean_cumulants(lambda, kOrder);
    log.add("observables", s, "M1 = B1 = 0", m.at(1).is_zero() && b.at(1).is_zero());
    bool integral = true;
    for (int k = 1; k <= kOrder; ++k) integral = integral && m.at(k).is_integer() && b.at(k).is_integer();
    log.add("observables", s, "M_k, B_k integral for k <= 12", integral);
    log.add("observables", s, "B2 = |lambda|", b.at(2) == Rational(lambda.size()), b.at(2).str());
    const auto mt = moments(lambda.transpose(), kOrder);
    const auto bt = boolean_cumulants(lambda.transpose(), kOrder);
    bool reflect = true;
    for (int k = 1; k <= kOrder; ++k) {
      const Rational sign = k % 2 == 0 ? Rational(1) : Rational(-1);
      reflect = reflect && mt.at(k) == sign * m.at(k) && bt.at(k) == sign * b.at(k);
    }
    log.add("observables", s, "transpose sign rule", reflect);
    log.add("observables", s, "moment-cumulant relation K = 12", moment_cumulant_check(lambda, kOrder));
  }
}

void character_suite(CheckLog& log, int max_n) {
  for (int n = 0; n <= std::min(max_n, 7); ++n) {
    const auto shapes = enumerate_partitions(n);
    for (const Partition& pi : shapes) {
      for (const Partition& rho : shapes) {
        if (rho < pi) continue;
        Integer sum = 0;
        for (const Partition& lambda : shapes)
          sum += mn_character_unnormalized(lambda, pi) * mn_character_unnormalized(lambda, rho);
        const Integer expected = pi == rho ? centralizer_order(pi) : Integer(0);
        log.add("characters", pi.str() + " " + rho.str(), "column orthogonality", sum == expected, sum.get_str());
      }
    }
  }
}

void kerov_suite(CheckLog& log, const VerifyConfig& config, const KerovOptions& options) {
  const VerificationReport report = verify_theorems(config.max_pi_size, config.max_k, options);
  for (const auto& c : report.checks) log.add(c.group, c.subject, c.name, c.passed, c.witness);

  const std::vector<std::pair<Partition, std::string>> known = {
      {Partition{1}, "x2"}, {Partition{2}, "x3"}, {Partition{1, 1}, "x2^2 + x2"}, {Partition{3}, "x4 + x2^2 + x2"}};
  for (const auto& [pi, text] : known) {
    if (pi.size() > config.max_pi_size) continue;
    auto it = report.polynomials.find(pi);
    const std::string got = it == report.polynomials.end() ? "(missing)" : it->second.str();
    log.add("kerov", pi.str(), "equals " + text, got == text, got);
  }
  const std::vector<std::pair<int, std::map<Partition, Integer>>> tables = {
      {2, {{Partition{1}, 1}}}, {3, {{Partition{2}, 1}}}, {4, {{Partition{3}, 1}, {Partition{1, 1}, 1}}}};
  for (const auto& [k, expected] : tables) {
    if (k > config.max_k) continue;
    auto it = report.expansions.find(k);
    log.add("expansion", "k=" + std::to_string(k), "matches known table",
            it != report.expansions.end() && it->second == expected);
  }
}

void route_suite(CheckLog& log, const VerifyConfig& config, const KerovOptions& kerov, const ReduceOptions& reduce) {
  for (int n = 1; n <= config.max_route_pi_size; ++n) {
    for (const Partition& pi : enumerate_partitions(n)) {
      log.guarded("routes", pi.str(), "diagrammatic P equals solver P", [&] {
        const auto p = boolean_kerov_polynomial(pi, kerov);
        const auto q = y_to_x(reduce_alpha(pi, std::vector<int>(static_cast<std::size_t>(n), 0), reduce));
        log.add("routes", pi.str(), "diagrammatic P equals solver P", p == q, p.str() + " vs " + q.str());
      });
    }
  }
  for (int k = 2; k <= config.max_k; ++k) {
    log.guarded("routes", "k=" + std::to_string(k), "dotted strand aggregate equals solver expansion", [&] {
      const bool same = aggregate_by_cycle_type(expand_dotted_strand(k - 2)) == boolean_in_characters(k);
      log.add("routes", "k=" + std::to_string(k), "dotted strand aggregate equals solver expansion", same);
    });
  }
}

void bubble_suite(CheckLog& log, const VerifyConfig& config, const ReduceOptions& reduce) {
  const auto diagrams = enumerate_partitions_up_to(config.bubble_diagram_size);
  for (int k = 0; k <= config.bubble_max_k; ++k) {
    const auto lhs = DiagramState::single(Configuration{{0}, {Bubble{k, 0}}});
    const DiagramState step = bubble_move_step(k);
    const DiagramState full = bubble_move_full(k).as_state();
    std::string step_fail, full_fail;
    for (const Partition& mu : diagrams) {
      const Rational closed = evaluate_closed_strand(lhs, mu);
      if (evaluate_closed_strand(step, mu) != closed) step_fail = mu.str();
      if (evaluate_closed_strand(full, mu) != closed) full_fail = mu.str();
      for (long x : profile_coordinates(mu).minima) {
        const Rational v = evaluate_strand_state(lhs, mu, x);
        if (evaluate_strand_state(step, mu, x) != v) step_fail = mu.str() + " at content " + std::to_string(x);
        if (evaluate_strand_state(full, mu, x) != v) full_fail = mu.str() + " at content " + std::to_string(x);
      }
    }
    const std::string s = "k=" + std::to_string(k);
    log.add("bubbles", s, "single move identity", step_fail.empty(), step_fail);
    log.add("bubbles", s, "full move identity", full_fail.empty(), full_fail);
  }
  for (int k = 0; k <= 12; ++k) {
    log.guarded("bubbles", "k=" + std::to_string(k), "full move coefficients non-negative", [&] {
      const BubbleMove& move = bubble_move_full(k);
      bool ok = true;
      for (const auto& [ij, c] : move.m) ok = ok && c >= 0 && ij.first + ij.second <= k;
      for (const auto& [l, c] : move.n) ok = ok && c >= 0 && l <= k;
      log.add("bubbles", "k=" + std::to_string(k), "full move coefficients non-negative", ok);
    });
  }
  for (int n = 1; n <= config.order_independence_pi_size; ++n) {
    for (const Partition& pi : enumerate_partitions(n)) {
      log.guarded("bubbles", pi.str(), "extraction order independence", [&] {
        ReduceOptions inner = reduce, outer = reduce;
        inner.schedule = ExtractionSchedule::InnermostFirst;
        outer.schedule = ExtractionSchedule::OutermostFirst;
        const std::vector<int> dots(static_cast<std::size_t>(n), 0);
        const bool same = alpha_in_center(pi, dots, inner) == alpha_in_center(pi, dots, outer);
        log.add("bubbles", pi.str(), "extraction order independence", same);
      });
    }
  }
}

}  // namespace

VerifyOutcome run_verify(const VerifyConfig& config) {
  KerovOptions kerov;
  ReduceOptions reduce;
  if (config.mutation == Mutation::FlipTwistedSign) kerov.twisted_sign = 1;
  if (config.mutation == Mutation::DropCurlDot) reduce.curl_dot_shift = 0;
  CheckLog log;
  observable_suite(log, config.max_diagram_size);
  character_suite(log, config.max_diagram_size);
  kerov_suite(log, config, kerov);
  route_suite(log, config, kerov, reduce);
  bubble_suite(log, config, reduce);
  return log.finish(config.profile);
}

namespace {

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// Cached computation of a two-route table: the stored document holds the
// rows plus the agreement verdict, and output is always rendered from it.
RouteTable cached_route_table(const std::function<RouteTable()>& compute, const Table& skeleton, bool use_cache) {
  const ResultCache cache(ResultCache::default_directory());
  const std::string& command = skeleton.command;
  const json& params = skeleton.params;
  if (use_cache) {
    if (auto hit = cache.load(command, params)) {
      RouteTable out;
      out.table = skeleton;
      out.table.rows = hit->at("rows").get<std::vector<json>>();
      out.routes_agree = hit->at("agree").get<bool>();
      out.diff = hit->at("diff").get<std::string>();
      return out;
    }
  }
  RouteTable out = compute();
  if (use_cache) cache.store(command, params, json{{"rows", out.table.rows}, {"agree", out.routes_agree}, {"diff", out.diff}});
  return out;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Boolean cumulants, characters and Boolean-Kerov polynomials of Young diagrams", "bkcalc"};
  app.require_subcommand(1);
  std::string format_name = "text";
  bool no_cache = false;
  bool timestamp = false;
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json", "latex"}))
      ->capture_default_str();
  app.add_flag("--no-cache", no_cache, "Bypass the result cache");
  app.add_flag("--timestamp", timestamp, "Append a generation timestamp");

  auto* obs = app.add_subcommand("observables", "Profile, moments and cumulants of one diagram");
  obs->fallthrough();
  std::string lambda_text, kind = "moment";
  int obs_k = 6;
  obs->add_option("--lambda", lambda_text, "Partition, e.g. \"(2,1)\" or 2,1")->required();
  obs->add_option("--kind", kind, "moment|boolean|twisted-boolean|free|profile")
      ->check(CLI::IsMember({"moment", "boolean", "twisted-boolean", "free", "profile"}))
      ->capture_default_str();
  obs->add_option("--max-k", obs_k, "Highest order")->capture_default_str();

  auto* kerov = app.add_subcommand("kerov-boolean", "Boolean-Kerov polynomials P_pi");
  kerov->fallthrough();
  int max_pi = 4;
  kerov->add_option("--max-pi-size", max_pi, "Largest |pi|")->capture_default_str();

  auto* expand = app.add_subcommand("expand-boolean", "Boolean cumulants in normalized characters");
  expand->fallthrough();
  int expand_k = 6;
  expand->add_option("--max-k", expand_k, "Largest k")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Run the invariant suites");
  verify->fallthrough();
  std::string profile = "quick", mutation = "none", report_path;
  verify->add_option("--profile", profile, "quick|full")
      ->check(CLI::IsMember({"quick", "full"}))
      ->capture_default_str();
  verify->add_option("--mutate", mutation, "Deliberately break a convention (none|flip-twisted-sign|drop-curl-dot)")
      ->check(CLI::IsMember({"none", "flip-twisted-sign", "drop-curl-dot"}))
      ->capture_default_str();
  verify->add_option("--report", report_path, "Write the JSON report to this file");

  auto* cache_cmd = app.add_subcommand("cache", "Inspect or clear the result cache");
  cache_cmd->fallthrough();
  std::string action = "path";
  cache_cmd->add_option("action", action, "path|list|clear")
      ->check(CLI::IsMember({"path", "list", "clear"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    const Format format = parse_format(format_name);
    const std::string stamp = timestamp ? utc_timestamp() : "";
    if (obs->parsed()) {
      out << render(observables_table(Partition::parse(lambda_text), kind, obs_k), format, stamp);
      return kSuccess;
    }
    if (kerov->parsed() || expand->parsed()) {
      const bool is_kerov = kerov->parsed();
      const int arg = is_kerov ? max_pi : expand_k;
      if (arg < (is_kerov ? 1 : 2)) throw InvalidInput(is_kerov ? "--max-pi-size must be at least 1" : "--max-k must be at least 2");
      auto compute = [&] { return is_kerov ? kerov_boolean_table(arg) : expand_boolean_table(arg); };
      const Table skeleton = is_kerov ? kerov_skeleton(arg) : expand_skeleton(arg);
      const RouteTable result = cached_route_table(compute, skeleton, !no_cache);
      out << render(result.table, format, stamp);
      if (!result.routes_agree) {
        err << "routes disagree:\n" << result.diff;
        return kVerificationFailure;
      }
      return kSuccess;
    }
    if (verify->parsed()) {
      VerifyConfig config = profile == "full" ? VerifyConfig::full() : VerifyConfig::quick();
      config.mutation = parse_mutation(mutation);
      const VerifyOutcome outcome = run_verify(config);
      json report = outcome.report;
      if (!stamp.empty()) report["generated"] = stamp;
      if (!report_path.empty()) {
        std::ofstream f(report_path);
        f << report.dump(2) << "\n";
        if (!f) throw std::runtime_error("cannot write report to " + report_path);
      }
      if (format == Format::Json) {
        out << report.dump(2) << "\n";
      } else {
        for (const auto& line : outcome.summary) out << line << "\n";
        for (const auto& c : outcome.report.at("checks")) {
          if (!c.at("passed").get<bool>()) {
            out << "FAIL " << c.at("group").get<std::string>() << " " << c.at("subject").get<std::string>() << ": "
                << c.at("check").get<std::string>() << " (" << c.value("witness", "") << ")\n";
          }
        }
        out << "verification " << (outcome.passed ? "passed" : "FAILED") << " (profile " << config.profile << ")\n";
        if (!stamp.empty()) out << "generated: " << stamp << "\n";
      }
      return outcome.passed ? kSuccess : kVerificationFailure;
    }
    if (cache_cmd->parsed()) {
      const ResultCache cache(ResultCache::default_directory());
      if (action == "path") out << cache.directory().string() << "\n";
      else if (action == "list") out << cache.entries() << " entries in " << cache.directory().string() << "\n";
      else out << "removed " << cache.clear() << " entries\n";
      return kSuccess;
    }
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const InvariantViolation& e) {
    err << "internal invariant violated: " << e.what() << "\n";
    return kInvariantViolation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInvariantViolation;
  }
  return kUsageError;
}

}  // namespace bk::cli
