#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "bk/cli/table.hpp"
#include "bk/partition.hpp"

namespace bk::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailure = 1,
  kUsageError = 2,
  kInvariantViolation = 3,
};

/// kind is one of moment, boolean, twisted-boolean, free, profile.
Table observables_table(const Partition& lambda, const std::string& kind, int max_k);

struct RouteTable {
  Table table;
  bool routes_agree = true;
  std::string diff;  // one line per disagreement
};

/// P_pi for 1 <= |pi| <= max_pi_size from the evaluation solver, compared
/// with the diagrammatic reduction.
RouteTable kerov_boolean_table(int max_pi_size);
/// m^k_pi for 2 <= k <= max_k, compared with the dotted-strand expansion.
RouteTable expand_boolean_table(int max_k);

enum class Mutation { None, FlipTwistedSign, DropCurlDot };
Mutation parse_mutation(const std::string& name);

struct VerifyConfig {
  std::string profile;
  int max_diagram_size = 6;  // observable invariants over all lambda with |lambda| <= this
  int max_pi_size = 4;
  int max_k = 4;
  int max_route_pi_size = 4;  // diagrammatic reduction is compared up to this size
  int bubble_diagram_size = 6;
  int bubble_max_k = 4;
  int order_independence_pi_size = 3;
  Mutation mutation = Mutation::None;

  static VerifyConfig quick();
  static VerifyConfig full();
};

struct VerifyOutcome {
  json report;                     // {"profile", "groups": {...}, "checks": [...]}
  std::vector<std::string> summary;  // one human-readable line per group
  bool passed = true;
};

VerifyOutcome run_verify(const VerifyConfig& config);

/// Full command-line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bk::cli
