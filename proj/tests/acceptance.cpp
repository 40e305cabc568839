// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails or exceeds its time limit.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <birack/birack.hpp>
#include <birack/census.hpp>
#include <birack/constructors.hpp>
#include <birack/error.hpp>
#include <birack/groups.hpp>
#include <birack/perm_group.hpp>
#include <birack/retracts.hpp>
#include <birack/solution.hpp>
#include <birack/theorems.hpp>

using namespace birack;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void expect(bool cond, std::string const& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    } else if (!cond) {
      detail += "; " + what;
    }
  }
};

std::vector<Birack> census() {
  std::vector<Birack> all;
  for (std::size_t n = 1; n <= max_full_census; ++n) {
    auto part = all_biracks(n);
    all.insert(all.end(), part.begin(), part.end());
  }
  auto four = distributive_biracks(max_distributive_census);
  all.insert(all.end(), four.begin(), four.end());
  return all;
}

std::vector<Birack> distributive_census() {
  std::vector<Birack> out;
  for (std::size_t n = 1; n <= max_distributive_census; ++n) {
    auto part = distributive_biracks(n);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

// Orders classes with "not nilpotent" above every finite class.
std::size_t rank(std::optional<std::size_t> c) { return c ? *c : SIZE_MAX; }

Outcome six_point_example() {
  Outcome o;
  Birack b = validate(example6().circ_table(), example6().bullet_table());
  auto l = lmlt(b);
  auto r = rmlt(b);
  o.expect(is_distributive(b), "not distributive");
  o.expect(l.order() == 8 && !l.is_abelian(), "LMlt is not non-abelian of order 8");
  o.expect(r.order() == 2, "|RMlt| != 2");
  o.expect(center(l) == r, "center(LMlt) != RMlt");
  o.expect(orbits(l).to_string() == "{{0,1},{2,3,4,5}}", "LMlt orbits");
  o.expect(orbits(r).to_string() == "{{0},{1},{2,3},{4,5}}", "RMlt orbits");
  o.expect(nilpotency_class(mlt(b)) == 2, "class(Mlt) != 2");
  o.expect(multipermutation_level(b) == 3, "level != 3");
  VerifyOptions opt;
  opt.k_max = 5;
  o.expect(verify_main_theorem(b, opt).holds, "main theorem counterexample");
  return o;
}

Outcome wada_sweep() {
  Outcome o;
  struct Row {
    FiniteGroup g;
    bool distributive, involutive, projection;
  };
  std::vector<Row> rows{
      {cyclic(8), false, false, false},
      {direct_product(cyclic(4), cyclic(2)), true, false, false},
      {dihedral(8), true, false, false},
      {quaternion8(), true, false, false},
      {elementary_abelian(3), true, true, true},
  };
  for (auto const& row : rows) {
    auto w = wada(row.g);
    o.expect(is_distributive(w) == row.distributive, row.g.name() + " distributivity");
    o.expect(is_involutive(w) == row.involutive, row.g.name() + " involutivity");
    o.expect(is_projection(w) == row.projection, row.g.name() + " projection");
  }
  auto q = wada(quaternion8());
  o.expect(quotient(q, approx(q)) == projection(4), "Q8 retract is not projection(4)");
  return o;
}

Outcome braid_cross_oracle() {
  Outcome o;
  std::size_t pairs = 0;
  std::size_t discrepancies = 0;
  for (std::size_t n = 1; n <= max_full_census; ++n) {
    for_each_table_pair(n, [&](Table const& circ, Table const& bullet) {
      ++pairs;
      bool valid = true;
      try {
        validate(circ, bullet);
      } catch (Error const&) {
        valid = false;
      }
      Solution s{n, circ, Table(n, std::vector<point>(n))};
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) s.tau[y][x] = bullet[x][y];
      bool const braided = is_non_degenerate(s) && braid_check(s);
      discrepancies += valid != braided;
    });
  }
  o.expect(discrepancies == 0, std::to_string(discrepancies) + " discrepancies");
  o.detail = std::to_string(pairs) + " table pairs" + (o.ok ? "" : ", " + o.detail);
  return o;
}

Outcome theorem_suites() {
  Outcome o;
  auto main = run_suite(Suite::main, max_distributive_census);
  auto left = run_suite(Suite::ld_nilp, max_distributive_census);
  o.expect(main.passed(), std::to_string(main.failures.size()) + " main failures");
  o.expect(left.passed(), std::to_string(left.failures.size()) + " left failures");
  if (o.ok) {
    o.detail = std::to_string(main.instances) + " + " + std::to_string(left.instances) +
               " instances";
  }
  return o;
}

Outcome congruences() {
  Outcome o;
  std::size_t failures = 0;
  for (auto const& b : census()) {
    bool good = is_congruence(b, approx(b).classes);
    if (is_left_distributive(b)) good = good && is_congruence(b, sim(b).classes);
    if (is_involutive(b)) good = good && sim(b).classes == bsim(b).classes;
    if (is_distributive(b)) {
      auto r = ret(b);
      good = good && is_idempotent(r);
      good = good && is_projection(quotient(b, join(b, sim(b), bsim(b))));
    }
    failures += !good;
  }
  o.expect(failures == 0, std::to_string(failures) + " failures");
  return o;
}

Outcome rack_corollary() {
  Outcome o;
  VerifyOptions opt;
  opt.k_max = 5;
  auto r = run_suite(Suite::rack, max_rack_census, opt);
  o.expect(r.passed(), std::to_string(r.failures.size()) + " counterexamples");
  if (o.ok) o.detail = std::to_string(r.instances) + " racks";
  return o;
}

Outcome mlt_class() {
  Outcome o;
  std::size_t failures = 0;
  for (auto const& b : distributive_census()) {
    auto l = lmlt(b);
    auto r = rmlt(b);
    bool const commute = groups_commute(l, r);
    std::size_t const expected = std::max(rank(nilpotency_class(l)), rank(nilpotency_class(r)));
    failures += !commute || rank(nilpotency_class(mlt(b))) != expected;
  }
  o.expect(failures == 0, std::to_string(failures) + " failures");
  return o;
}

Outcome derived_examples() {
  Outcome o;
  auto w = wada(cyclic(4));
  auto m = mlt(w);
  o.expect(multipermutation_level(w) == 2, "level of wada(Z4) != 2");
  o.expect(m.is_abelian() && m.order() == 4, "Mlt(wada(Z4)) is not abelian of order 4");
  for (std::size_t n = 2; n <= 4; ++n) {
    std::vector<point> shift(n);
    for (std::size_t i = 0; i < n; ++i) shift[i] = static_cast<point>((i + 1) % n);
    auto p = permutational(Perm(shift), Perm::identity(n));
    std::string const tag = " (n = " + std::to_string(n) + ")";
    o.expect(is_left_m_permutational(p, 1), "not left 1-permutational" + tag);
    o.expect(!is_left_m_reductive(p, 1), "left 1-reductive" + tag);
    o.expect(lret(p).size() == 1, "|LRet| != 1" + tag);
    o.expect(!lmlt(p).is_trivial(), "trivial LMlt" + tag);
  }
  return o;
}

struct Criterion {
  int id;
  char const* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "six-point distributive example", 1, six_point_example},
      {2, "Wada sweep over groups of order 8", 5, wada_sweep},
      {3, "axioms vs braid relation on all table pairs, n <= 3", 120, braid_cross_oracle},
      {4, "level/reductive/permutational/nilpotent equivalences on the census", 600,
       theorem_suites},
      {5, "congruence and retract properties on the census", 600, congruences},
      {6, "rack reductivity vs nilpotency, n <= 4, k <= 5", 120, rack_corollary},
      {7, "class(Mlt) = max(class(LMlt), class(RMlt)) and LMlt, RMlt commute", 600,
       mlt_class},
      {8, "wada(Z4) level and permutational exception", 5, derived_examples},
  };
  int failed = 0;
  for (auto const& c : criteria) {
    auto const start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (std::exception const& e) {
      out.ok = false;
      out.detail = std::string("exception: ") + e.what();
    }
    double const secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (out.ok && secs > c.limit_seconds) {
      out.ok = false;
      out.detail = "exceeded " + std::to_string(c.limit_seconds) + " s";
    }
    failed += !out.ok;
    std::printf("%s criterion %d: %s (%.2f s)%s%s\n", out.ok ? "PASS" : "FAIL", c.id, c.name,
                secs, out.detail.empty() ? "" : " - ", out.detail.c_str());
  }
  return failed == 0 ? 0 : 1;
}
