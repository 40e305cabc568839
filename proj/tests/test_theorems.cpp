#include <birack/census.hpp>
#include <birack/constructors.hpp>
#include <birack/error.hpp>
#include <birack/groups.hpp>
#include <birack/retracts.hpp>
#include <birack/theorems.hpp>

#include "doctest.h"
#include "support.hpp"

using namespace birack;

namespace {

bool all_true(ConditionRow const& r) {
  return r.retract_collapses.value_or(false) && r.reductive.value_or(false) &&
         r.permutational.value_or(false) && r.nilpotent;
}

std::optional<std::size_t> first_all_true(TheoremReport const& t) {
  for (auto const& r : t.rows) {
    if (all_true(r)) return r.k;
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("left theorem") {
  SUBCASE("six-point example") {
    VerifyOptions o;
    o.k_max = 4;
    auto t = verify_thm_ld_nilp(example6(), o);
    CHECK(t.holds);
    CHECK_FALSE(t.k1_included);
    CHECK(t.rows.front().k == 2);
    CHECK(first_all_true(t) == 3);
  }
  SUBCASE("permutational exception at k = 1") {
    auto b = permutational(Perm{1, 2, 0}, Perm::identity(3));
    CHECK(lret(b).size() == 1);
    CHECK_FALSE(lmlt(b).is_trivial());
    auto t = verify_thm_ld_nilp(b);
    CHECK(t.holds);
    CHECK_FALSE(t.k1_included);
  }
  SUBCASE("projection includes k = 1") {
    auto t = verify_thm_ld_nilp(projection(3));
    CHECK(t.k1_included);
    REQUIRE(t.rows.front().k == 1);
    CHECK(all_true(t.rows.front()));
  }
  SUBCASE("precondition") {
    CHECK_THROWS_AS(verify_thm_ld_nilp(wada(dihedral(6))), Error);
  }
}

TEST_CASE("main theorem") {
  auto e = verify_main_theorem(example6());
  CHECK(e.holds);
  CHECK(e.group_class == 2);
  CHECK(first_all_true(e) == 3);
  CHECK(e.notes.empty());

  auto q = verify_main_theorem(wada(quaternion8()));
  CHECK(q.holds);
  CHECK(first_all_true(q) == multipermutation_level(wada(quaternion8())));

  auto p = verify_main_theorem(projection(2));
  CHECK(p.holds);
  CHECK(p.group_class == 0);
  auto const& k2 = p.rows[p.k1_included ? 1 : 0];
  CHECK(k2.k == 2);
  CHECK(all_true(k2));

  CHECK_THROWS_AS(verify_main_theorem(wada(cyclic(8))), Error);
}

TEST_CASE("rack corollary") {
  Table trivial{{0, 1, 2}, {0, 1, 2}, {0, 1, 2}};
  auto t = verify_rack_corollary(Rack::left(trivial));
  CHECK(t.holds);
  CHECK(t.group_order == 1);
  CHECK(t.rows.front().k == 1);
  CHECK(t.rows.front().reductive == true);

  Table dihedral{{0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
  auto d = verify_rack_corollary(Rack::left(dihedral));
  CHECK(d.holds);
  CHECK(d.group_order == 6);
  CHECK_FALSE(d.group_class.has_value());
  for (auto const& r : d.rows) {
    CHECK(r.reductive == false);
    CHECK_FALSE(r.nilpotent);
  }
}

TEST_CASE("reductivity budget marks rows untested") {
  VerifyOptions o;
  o.tuple_budget = 100;
  auto t = verify_main_theorem(example6(), o);
  CHECK(t.holds);
  bool skipped = false;
  for (auto const& r : t.rows) skipped = skipped || !r.reductive.has_value();
  CHECK(skipped);
}

TEST_CASE("suites on small censuses") {
  for (auto s : {Suite::ld_nilp, Suite::main, Suite::rack, Suite::bridge, Suite::congruence}) {
    auto r = run_suite(s, 2);
    CHECK(r.passed());
    CHECK(r.instances > 0);
    CHECK(parse_suite(to_string(s)) == s);
  }
  CHECK_FALSE(parse_suite("nope").has_value());
}
