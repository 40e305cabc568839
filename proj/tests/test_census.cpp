#include <algorithm>
#include <set>

#include <birack/census.hpp>
#include <birack/constructors.hpp>
#include <birack/error.hpp>
#include <birack/groups.hpp>

#include "doctest.h"
#include "support.hpp"

using namespace birack;

namespace {

using Key = std::pair<Table, Table>;

Key key(Birack const& b) { return {b.circ_table(), b.bullet_table()}; }

// Counts cross-checked against an independent braid-relation enumeration.
constexpr std::size_t birack_counts[] = {0, 1, 4, 66};
constexpr std::size_t rack_counts[] = {0, 1, 2, 13, 114};
constexpr std::size_t distributive_counts[] = {0, 1, 4, 56, 1428};

}  // namespace

TEST_CASE("full census counts") {
  for (std::size_t n = 1; n <= 3; ++n) {
    CHECK(all_biracks(n).size() == birack_counts[n]);
  }
  CHECK_THROWS_AS(all_biracks(4), Error);
  CHECK(enumerate_biracks(1).size() == 1);
}

TEST_CASE("full census equals the braid-relation census") {
  for (std::size_t n = 1; n <= 3; ++n) {
    std::set<Key> braided;
    for_each_table_pair(n, [&](Table const& c, Table const& b) {
      oracle::Tables t;
      for (auto const& r : c) t.c.emplace_back(r.begin(), r.end());
      for (auto const& r : b) t.b.emplace_back(r.begin(), r.end());
      if (oracle::braid(t)) braided.insert({c, b});
    });
    std::set<Key> census;
    for (auto const& b : all_biracks(n)) census.insert(key(b));
    CHECK(census == braided);
  }
}

TEST_CASE("small constructions appear in the census") {
  auto census = all_biracks(2);
  auto has = [&](Birack const& b) {
    return std::find(census.begin(), census.end(), b) != census.end();
  };
  CHECK(has(projection(2)));
  CHECK(has(permutational(Perm{1, 0}, Perm{1, 0})));
}

TEST_CASE("rack counts") {
  for (std::size_t n = 1; n <= 4; ++n) {
    CHECK(left_racks(n).size() == rack_counts[n]);
    CHECK(right_racks(n).size() == rack_counts[n]);
  }
}

TEST_CASE("distributive census") {
  for (std::size_t n = 1; n <= 4; ++n) {
    CHECK(distributive_biracks(n).size() == distributive_counts[n]);
  }
  CHECK_THROWS_AS(distributive_biracks(5), Error);
  CHECK(enumerate_distributive(1).size() == 1);

  for (std::size_t n = 1; n <= 3; ++n) {
    std::set<Key> filtered;
    for (auto const& e : enumerate_biracks(n)) {
      if (e.report.distributive) filtered.insert(key(e.birack));
    }
    std::set<Key> direct;
    for (auto const& b : distributive_biracks(n)) direct.insert(key(b));
    CHECK(direct == filtered);
  }

  auto four = distributive_biracks(4);
  auto target = canonical_form(wada(cyclic(4)));
  bool found = std::any_of(four.begin(), four.end(),
                           [&](Birack const& b) { return canonical_form(b) == target; });
  CHECK(found);
}

TEST_CASE("canonical form") {
  auto b = example6();
  CHECK(canonical_form(b) == canonical_form(canonical_form(b)));
  auto census = all_biracks(3);
  auto classes = dedupe(census);
  CHECK(classes.size() < census.size());
  std::set<Key> seen;
  for (auto const& c : classes) CHECK(seen.insert(key(canonical_form(c))).second);
  for (auto const& c : census) CHECK(seen.count(key(canonical_form(c))) == 1);
  CHECK(enumerate_biracks(3, true).size() == classes.size());
}

TEST_CASE("census entries are consistent with recomputation") {
  for (auto const& e : enumerate_distributive(3)) {
    CHECK(e.report.distributive);
    CHECK(e.mpl == oracle::level(support::tables(e.birack)));
    CHECK(e.report.lmlt.order == lmlt(e.birack).order());
  }
}
