#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "birack/birack.hpp"
#include "birack/constructors.hpp"

namespace birack {

struct VerifyOptions {
  std::size_t k_max = 6;
  // Brute-force reductivity and permutationality checks are skipped (and the
  // row marked untested) beyond this many tuple evaluations or this m.
  double tuple_budget = 1e8;
  std::size_t max_m = 8;
};

// The four conditions at one k:
//   (i)   the k-th iterated retract has one element
//   (ii)  k-reductive
//   (iii) k-permutational
//   (iv)  the relevant multiplication group has class <= k - 1
struct ConditionRow {
  std::size_t k = 0;
  std::optional<bool> retract_collapses;
  std::optional<bool> reductive;
  std::optional<bool> permutational;
  bool nilpotent = false;
  bool agree = false;
};

struct TheoremReport {
  std::string theorem;  // "ld-nilp", "main" or "rack"
  std::string instance;
  std::vector<ConditionRow> rows;
  std::vector<std::size_t> tower_sizes;  // |stage 0|, |stage 1|, ...
  std::size_t group_order = 0;
  std::optional<std::size_t> group_class;
  bool k1_included = false;
  std::vector<std::string> notes;  // failed side conditions
  bool holds = true;
  std::optional<std::size_t> counterexample_k;
  Table circ;  // the instance, for reproducing a counterexample
  Table bullet;
};

// Left distributive birack: LRet tower, left reductivity/permutationality and
// LMlt, for k = 2..k_max, plus k = 1 when the birack is idempotent. Throws
// NotLeftDistributive.
TheoremReport verify_thm_ld_nilp(Birack const& b, VerifyOptions const& options = {},
                                 std::string const& label = "");

// Distributive birack: Ret tower, two-sided reductivity/permutationality and
// Mlt. Also checks that class(Mlt) = max(class(LMlt), class(RMlt)), that
// LMlt and RMlt commute, and that the right-hand checks agree with the
// left-hand checks on the mirror birack. Throws NotDistributive.
TheoremReport verify_main_theorem(Birack const& b, VerifyOptions const& options = {},
                                  std::string const& label = "");

// Left rack alone: k-reductive iff LMlt has class <= k - 1, k = 1..k_max.
// The retract and permutational columns are not part of this statement and
// stay empty.
TheoremReport verify_rack_corollary(Rack const& r, VerifyOptions const& options = {},
                                    std::string const& label = "");

enum class Suite { ld_nilp, main, rack, bridge, congruence };

std::optional<Suite> parse_suite(std::string const& name);
std::string to_string(Suite suite);

struct SuiteResult {
  Suite suite = Suite::main;
  std::size_t n_max = 0;
  std::size_t instances = 0;
  std::vector<std::string> failures;  // one description per failed instance
  std::vector<std::string> findings;  // informational, never a failure
  bool passed() const { return failures.empty(); }
};

// Runs a suite over every census instance with 1 <= n <= n_max:
//   ld-nilp     left distributive biracks (full census n <= 3, distributive
//               census at n = 4)
//   main        distributive biracks, same census; also searches the
//               non-distributive n <= 3 census for biracks where level and
//               nilpotency disagree and lists them as findings
//   rack        left racks, n <= 4
//   bridge      every table pair for n <= 3: birack axioms vs braid relation,
//               plus the solution-level predicates on every valid birack
//   congruence  congruence and retract properties on the census
SuiteResult run_suite(Suite suite, std::size_t n_max, VerifyOptions const& options = {});

}  // namespace birack
