#include "birack/theorems.hpp"

#include <algorithm>
#include <sstream>

#include "birack/census.hpp"
#include "birack/error.hpp"
#include "birack/perm_group.hpp"
#include "birack/retracts.hpp"
#include "birack/solution.hpp"

namespace birack {

namespace {

bool within_budget(std::size_t n, std::size_t k, VerifyOptions const& o) {
  return k <= o.max_m && reductivity_cost(n, k) <= o.tuple_budget;
}

bool nilpotent_within(std::optional<std::size_t> cls, std::size_t k) {
  return cls && *cls + 1 <= k;
}

bool row_agrees(ConditionRow const& row) {
  auto const consistent = [&](std::optional<bool> v) { return !v || *v == row.nilpotent; };
  return consistent(row.retract_collapses) && consistent(row.reductive) &&
         consistent(row.permutational);
}

void finish(TheoremReport& report) {
  for (auto& row : report.rows) {
    row.agree = row_agrees(row);
    if (!row.agree && !report.counterexample_k) {
      report.counterexample_k = row.k;
    }
  }
  report.holds = !report.counterexample_k && report.notes.empty();
}

TheoremReport start(std::string theorem, std::string const& label, Birack const& b,
                    RetractTower const* t, PermGroup const& g) {
  TheoremReport r;
  r.theorem = std::move(theorem);
  r.instance = label;
  if (t) {
    for (Birack const& stage : t->stages) {
      r.tower_sizes.push_back(stage.size());
    }
  }
  r.group_order = g.order();
  r.group_class = nilpotency_class(g);
  r.circ = b.circ_table();
  r.bullet = b.bullet_table();
  return r;
}

}  // namespace

TheoremReport verify_thm_ld_nilp(Birack const& b, VerifyOptions const& options,
                                 std::string const& label) {
  if (!is_left_distributive(b)) {
    throw Error(ErrorKind::NotLeftDistributive, "left distributivity is required");
  }
  RetractTower const t = tower(b, RetractKind::left);
  PermGroup const g = lmlt(b);
  TheoremReport report = start("ld-nilp", label, b, &t, g);
  report.k1_included = is_idempotent(b);
  std::size_t const n = b.size();
  for (std::size_t k = report.k1_included ? 1 : 2; k <= options.k_max; ++k) {
    ConditionRow row;
    row.k = k;
    row.retract_collapses = t.size_at(k) == 1;
    if (within_budget(n, k, options)) {
      row.reductive = is_left_m_reductive(b, k);
      row.permutational = is_left_m_permutational(b, k);
    }
    row.nilpotent = nilpotent_within(report.group_class, k);
    report.rows.push_back(row);
  }
  finish(report);
  return report;
}

TheoremReport verify_main_theorem(Birack const& b, VerifyOptions const& options,
                                  std::string const& label) {
  if (!is_distributive(b)) {
    throw Error(ErrorKind::NotDistributive, "distributivity is required");
  }
  RetractTower const t = tower(b, RetractKind::full);
  PermGroup const g = mlt(b);
  PermGroup const gl = lmlt(b);
  PermGroup const gr = rmlt(b);
  TheoremReport report = start("main", label, b, &t, g);
  report.k1_included = is_idempotent(b);

  if (!groups_commute(gl, gr)) {
    report.notes.push_back("LMlt and RMlt do not commute");
  }
  auto const cl = nilpotency_class(gl);
  auto const cr = nilpotency_class(gr);
  std::optional<std::size_t> expected;
  if (cl && cr) {
    expected = std::max(*cl, *cr);
  }
  if (expected != report.group_class) {
    report.notes.push_back("class(Mlt) differs from max(class(LMlt), class(RMlt))");
  }

  Birack const m = mirror(b);
  std::size_t const n = b.size();
  for (std::size_t k = report.k1_included ? 1 : 2; k <= options.k_max; ++k) {
    ConditionRow row;
    row.k = k;
    row.retract_collapses = t.size_at(k) == 1;
    if (within_budget(n, k, options)) {
      bool const right_red = is_right_m_reductive(b, k);
      bool const right_perm = is_right_m_permutational(b, k);
      if (right_red != is_left_m_reductive(m, k) ||
          right_perm != is_left_m_permutational(m, k)) {
        report.notes.push_back("right-hand checks disagree with the mirror at k = " +
                               std::to_string(k));
      }
      row.reductive = is_left_m_reductive(b, k) && right_red;
      row.permutational = is_left_m_permutational(b, k) && right_perm;
    }
    row.nilpotent = nilpotent_within(report.group_class, k);
    report.rows.push_back(row);
  }
  finish(report);
  return report;
}

TheoremReport verify_rack_corollary(Rack const& r, VerifyOptions const& options,
                                    std::string const& label) {
  if (r.side() != Side::left) {
    throw Error(ErrorKind::NotARack, "the corollary is stated for left racks");
  }
  Birack const b = left_derived(r);
  PermGroup const g = closure(r.size(), r.translations());
  TheoremReport report = start("rack", label, b, nullptr, g);
  report.k1_included = true;
  for (std::size_t k = 1; k <= options.k_max; ++k) {
    ConditionRow row;
    row.k = k;
    if (within_budget(r.size(), k, options)) {
      row.reductive = is_left_m_reductive(b, k);
    }
    row.nilpotent = nilpotent_within(report.group_class, k);
    report.rows.push_back(row);
  }
  finish(report);
  return report;
}

std::optional<Suite> parse_suite(std::string const& name) {
  if (name == "ld-nilp") return Suite::ld_nilp;
  if (name == "main") return Suite::main;
  if (name == "rack") return Suite::rack;
  if (name == "bridge") return Suite::bridge;
  if (name == "congruence") return Suite::congruence;
  return std::nullopt;
}

std::string to_string(Suite suite) {
  switch (suite) {
    case Suite::ld_nilp: return "ld-nilp";
    case Suite::main: return "main";
    case Suite::rack: return "rack";
    case Suite::bridge: return "bridge";
    case Suite::congruence: return "congruence";
  }
  return "unknown";
}

namespace {

std::string label_of(std::size_t n, std::size_t index) {
  return "n" + std::to_string(n) + "#" + std::to_string(index);
}

std::string describe(TheoremReport const& r) {
  std::ostringstream os;
  os << r.theorem << " " << r.instance;
  if (r.counterexample_k) {
    os << ": conditions disagree at k = " << *r.counterexample_k;
  }
  for (auto const& note : r.notes) {
    os << "; " << note;
  }
  return os.str();
}

// The census every suite draws on: the full census for n <= 3 and the
// distributive census at n = 4.
void for_each_census_birack(std::size_t n_max,
                            std::function<void(Birack const&, std::string const&)> const& visit) {
  if (n_max == 0 || n_max > max_distributive_census) {
    throw Error(ErrorKind::SizeTooLarge, "suites run for 1 <= n <= " +
                                             std::to_string(max_distributive_census));
  }
  for (std::size_t n = 1; n <= std::min(n_max, max_full_census); ++n) {
    std::size_t index = 0;
    for_each_birack(n, [&](Birack const& b) { visit(b, label_of(n, index++)); });
  }
  if (n_max >= max_distributive_census) {
    std::size_t index = 0;
    for (Birack const& b : distributive_biracks(max_distributive_census)) {
      visit(b, "dist" + label_of(max_distributive_census, index++));
    }
  }
}

void run_theorem_suite(SuiteResult& result, VerifyOptions const& options) {
  std::size_t disagreements = 0;
  std::vector<std::string> examples;
  for_each_census_birack(result.n_max, [&](Birack const& b, std::string const& label) {
    if (result.suite == Suite::ld_nilp) {
      if (!is_left_distributive(b)) {
        return;
      }
      ++result.instances;
      auto const r = verify_thm_ld_nilp(b, options, label);
      if (!r.holds) {
        result.failures.push_back(describe(r));
      }
      return;
    }
    if (is_distributive(b)) {
      ++result.instances;
      auto const r = verify_main_theorem(b, options, label);
      if (!r.holds) {
        result.failures.push_back(describe(r));
      }
      return;
    }
    // Outside the theorem's hypothesis: record level/nilpotency mismatches.
    auto const level = multipermutation_level(b);
    auto const cls = nilpotency_class(mlt(b));
    for (std::size_t k = 2; k <= options.k_max; ++k) {
      bool const collapses = level && *level <= k;
      if (collapses != nilpotent_within(cls, k)) {
        if (++disagreements <= 10) {
          std::ostringstream os;
          os << label << ": level " << (level ? std::to_string(*level) : "none")
             << ", class(Mlt) " << (cls ? std::to_string(*cls) : "none")
             << ", first disagreement at k = " << k;
          examples.push_back(os.str());
        }
        break;
      }
    }
  });
  if (result.suite == Suite::main) {
    result.findings.push_back(std::to_string(disagreements) +
                              " non-distributive census biracks where the level and "
                              "nilpotency conditions disagree");
    result.findings.insert(result.findings.end(), examples.begin(), examples.end());
  }
}

void run_rack_suite(SuiteResult& result, VerifyOptions const& options) {
  if (result.n_max == 0 || result.n_max > max_rack_census) {
    throw Error(ErrorKind::SizeTooLarge,
                "rack suite runs for 1 <= n <= " + std::to_string(max_rack_census));
  }
  for (std::size_t n = 1; n <= result.n_max; ++n) {
    std::size_t index = 0;
    for (Rack const& r : left_racks(n)) {
      ++result.instances;
      auto const report = verify_rack_corollary(r, options, "rack" + label_of(n, index++));
      if (!report.holds) {
        result.failures.push_back(describe(report));
      }
    }
  }
}

void check(SuiteResult& result, bool ok, std::string const& label, std::string const& what) {
  if (!ok) {
    result.failures.push_back(label + ": " + what);
  }
}

void solution_checks(SuiteResult& result, Birack const& b, std::string const& label,
                     VerifyOptions const& options) {
  Solution const s = from_birack(b);
  check(result, to_birack(s) == b, label, "round trip through the solution changed the birack");
  check(result, is_involutive_solution(s) == is_involutive(b), label, "involutivity differs");
  check(result, is_square_free(s) == is_idempotent(b), label, "square-freeness differs");
  bool const distributive = is_distributive(b);
  check(result, is_distributive_solution(s) == distributive, label, "distributivity differs");
  PermGroup const yb = yang_baxter_group(s);
  check(result, yb == mlt(b), label, "Yang-Baxter group differs from Mlt");
  if (distributive) {
    auto const level = solution_mpl(s);
    auto const cls = nilpotency_class(yb);
    for (std::size_t k = 2; k <= options.k_max; ++k) {
      check(result, (level && *level <= k) == nilpotent_within(cls, k), label,
            "solution level and Yang-Baxter group class disagree at k = " + std::to_string(k));
    }
  }
}

void run_bridge_suite(SuiteResult& result, VerifyOptions const& options) {
  if (result.n_max == 0 || result.n_max > max_distributive_census) {
    throw Error(ErrorKind::SizeTooLarge, "bridge suite runs for 1 <= n <= " +
                                             std::to_string(max_distributive_census));
  }
  for (std::size_t n = 1; n <= std::min(result.n_max, max_full_census); ++n) {
    std::size_t index = 0;
    for_each_table_pair(n, [&](Table const& circ, Table const& bullet) {
      ++result.instances;
      Solution s{n, circ, Table(n, std::vector<point>(n))};
      for (point x = 0; x < n; ++x) {
        for (point y = 0; y < n; ++y) {
          s.tau[y][x] = bullet[x][y];
        }
      }
      bool const axioms = !find_axiom_violation(circ, bullet);
      bool const braided = is_non_degenerate(s) && braid_check(s);
      std::string const label = "pair" + label_of(n, result.instances - 1);
      check(result, axioms == braided, label, "birack axioms and braid relation disagree");
      if (axioms) {
        solution_checks(result, validate(circ, bullet), label_of(n, index++), options);
      }
    });
  }
  if (result.n_max >= max_distributive_census) {
    std::size_t index = 0;
    for (Birack const& b : distributive_biracks(max_distributive_census)) {
      ++result.instances;
      solution_checks(result, b, "dist" + label_of(max_distributive_census, index++), options);
    }
  }
}

void run_congruence_suite(SuiteResult& result) {
  std::size_t sim_failures = 0;
  for_each_census_birack(result.n_max, [&](Birack const& b, std::string const& label) {
    ++result.instances;
    check(result, is_congruence(b, approx(b).classes), label, "approx is not a congruence");
    bool const ld = is_left_distributive(b);
    bool const rd = is_right_distributive(b);
    if (!is_congruence(b, sim(b).classes)) {
      ++sim_failures;
    }
    if (ld) {
      check(result, is_congruence(b, sim(b).classes), label,
            "sim is not a congruence of a left distributive birack");
      Birack const l = lret(b);
      check(result, is_idempotent(l) && is_left_derived(l), label,
            "left retract is not idempotent and left derived");
      check(result, l == quotient(b, sim(b)), label,
            "left retract differs from the quotient by sim");
    }
    if (rd) {
      check(result, is_congruence(b, bsim(b).classes), label,
            "bsim is not a congruence of a right distributive birack");
      Birack const r = rret(b);
      check(result, is_idempotent(r) && is_right_derived(r), label,
            "right retract is not idempotent and right derived");
    }
    if (is_involutive(b)) {
      check(result, sim(b).classes == bsim(b).classes, label,
            "sim and bsim differ on an involutive birack");
      check(result, ld == rd, label, "involutive birack with one-sided distributivity");
    }
    check(result, is_distributive_alt(b) == (ld && rd), label,
          "alternative distributivity characterisation disagrees");
    if (ld && rd) {
      check(result, is_idempotent(ret(b)), label, "Ret is not idempotent");
      Congruence const theta = join(b, sim(b), bsim(b));
      check(result, is_projection(quotient(b, theta)), label,
            "quotient by the join of sim and bsim is not a projection birack");
      PermGroup const gl = lmlt(b);
      PermGroup const gr = rmlt(b);
      check(result, groups_commute(gl, gr), label, "LMlt and RMlt do not commute");
      check(result, translations_are_automorphisms(b), label,
            "a translation is not an automorphism");
      auto const cl = nilpotency_class(gl);
      auto const cr = nilpotency_class(gr);
      auto const cm = nilpotency_class(mlt(b));
      std::optional<std::size_t> expected;
      if (cl && cr) {
        expected = std::max(*cl, *cr);
      }
      check(result, cm == expected, label, "class(Mlt) != max(class(LMlt), class(RMlt))");
    }
    for (std::size_t m = 1; m <= 3; ++m) {
      if (is_left_m_permutational(b, m) && (is_idempotent(b) || (ld && m >= 2))) {
        check(result, is_left_m_reductive(b, m), label,
              "left m-permutational without left m-reductive at m = " + std::to_string(m));
      }
    }
    if (b.size() > 1) {
      auto const level = multipermutation_level(b);
      auto const next = multipermutation_level(ret(b));
      if (level && next) {
        check(result, *level == 1 + *next, label, "level is not one more than the level of Ret");
      }
    }
  });
  result.findings.push_back(std::to_string(sim_failures) +
                            " census biracks where sim is not a congruence");
}

}  // namespace

SuiteResult run_suite(Suite suite, std::size_t n_max, VerifyOptions const& options) {
  SuiteResult result;
  result.suite = suite;
  result.n_max = n_max;
  switch (suite) {
    case Suite::ld_nilp:
    case Suite::main:
      run_theorem_suite(result, options);
      break;
    case Suite::rack:
      run_rack_suite(result, options);
      break;
    case Suite::bridge:
      run_bridge_suite(result, options);
      break;
    case Suite::congruence:
      run_congruence_suite(result);
      break;
  }
  return result;
}

}  // namespace birack
