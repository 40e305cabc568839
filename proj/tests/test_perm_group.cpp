#include <algorithm>
#include <random>

#include <birack/constructors.hpp>
#include <birack/error.hpp>
#include <birack/perm.hpp>
#include <birack/perm_group.hpp>

#include "doctest.h"
#include "support.hpp"

using namespace birack;

namespace {

PermGroup symmetric3() {
  std::vector<Perm> gens{Perm{1, 0, 2}, Perm{1, 2, 0}};
  return closure(3, gens);
}

PermGroup lmlt6() { return lmlt(example6()); }

Perm random_perm(std::mt19937& rng, std::size_t n) {
  std::vector<point> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<point>(i);
  std::shuffle(v.begin(), v.end(), rng);
  return Perm(v);
}

}  // namespace

TEST_CASE("perm basics") {
  Perm a{1, 2, 0};
  Perm b{1, 0, 2};
  CHECK((a * b)(0) == a(b(0)));
  CHECK((a * a.inverse()).is_identity());
  CHECK(a.to_cycle_string() == "(0 1 2)");
  CHECK(Perm::identity(4).to_cycle_string() == "()");
  CHECK(Perm::from_cycles(6, {{3, 5, 4, 6}}, true) == Perm{0, 1, 4, 5, 3, 2});
  CHECK_THROWS_AS(Perm({0, 0, 1}), Error);
  CHECK_THROWS_AS(Perm({0, 3}), Error);
  CHECK(commutator(a, b) == a.inverse() * b.inverse() * a * b);
}

TEST_CASE("closure") {
  SUBCASE("empty generating set") {
    auto g = closure(3, std::span<Perm const>{});
    CHECK(g.order() == 1);
    CHECK(g.is_trivial());
  }
  SUBCASE("single involution") {
    std::vector<Perm> gens{Perm{1, 0}};
    CHECK(closure(2, gens).order() == 2);
  }
  SUBCASE("three left translations of the six-point example") {
    auto b = example6();
    std::vector<Perm> gens{left_translation(b, 0), left_translation(b, 2),
                           left_translation(b, 4)};
    auto g = closure(6, gens);
    CHECK(g.order() == 8);
    CHECK_FALSE(g.is_abelian());
  }
  SUBCASE("degree mismatch") {
    std::vector<Perm> gens{Perm{1, 0}};
    CHECK_THROWS_AS(closure(3, gens), Error);
  }
  SUBCASE("cap") {
    CHECK_THROWS_AS(closure(3, symmetric3().generators(), 5), Error);
  }
}

TEST_CASE("closure agrees with pairwise multiplication on random generators") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 2 + trial % 5;
    std::vector<Perm> gens;
    for (int i = 0; i < 1 + trial % 3; ++i) gens.push_back(random_perm(rng, n));
    auto g = closure(n, gens);
    auto ref = oracle::close(n, support::maps(gens));
    REQUIRE(support::elements(g) == ref);
    std::size_t fact = 1;
    for (std::size_t i = 2; i <= n; ++i) fact *= i;
    CHECK(fact % g.order() == 0);
    for (auto const& p : gens) CHECK(g.contains(p));
    CHECK(support::elements(center(g)) == oracle::center(ref));
    CHECK(nilpotency_class(g) == oracle::nil_class(n, ref));
    auto labels = oracle::orbit_labels(n, support::maps(gens));
    CHECK(orbits(g) == Partition::from_labels(labels));
  }
}

TEST_CASE("commutator subgroup") {
  SUBCASE("abelian group") {
    std::vector<Perm> gens{Perm{1, 2, 3, 0}};
    auto g = closure(4, gens);
    CHECK(commutator_subgroup(g, g).is_trivial());
  }
  SUBCASE("trivial left argument") {
    auto g = symmetric3();
    CHECK(commutator_subgroup(PermGroup(3), g).is_trivial());
  }
  SUBCASE("left multiplication group of the six-point example") {
    auto g = lmlt6();
    auto c = commutator_subgroup(g, g);
    CHECK(c.order() == 2);
    CHECK(c.contains(Perm::from_cycles(6, {{2, 3}, {4, 5}})));
    CHECK(support::elements(c) == oracle::commutators(6, support::elements(g),
                                                      support::elements(g)));
  }
  SUBCASE("not a subgroup") {
    std::vector<Perm> gens{Perm{0, 2, 1}};
    auto h = closure(3, gens);
    std::vector<Perm> other{Perm{1, 0, 2}};
    CHECK_THROWS_AS(commutator_subgroup(h, closure(3, other)), Error);
  }
}

TEST_CASE("lower central series and class") {
  auto orders = [](std::vector<PermGroup> const& s) {
    std::vector<std::size_t> out;
    for (auto const& g : s) out.push_back(g.order());
    return out;
  };
  CHECK(orders(lower_central_series(PermGroup(3))) == std::vector<std::size_t>{1});
  CHECK(orders(lower_central_series(lmlt6())) == std::vector<std::size_t>{8, 2, 1});
  auto s3 = lower_central_series(symmetric3());
  CHECK(orders(s3) == std::vector<std::size_t>{6, 3});
  CHECK(orders(s3) == oracle::series_orders(3, support::elements(symmetric3())));

  CHECK(nilpotency_class(PermGroup(4)) == 0);
  std::vector<Perm> cyc{Perm{1, 2, 0}};
  CHECK(nilpotency_class(closure(3, cyc)) == 1);
  CHECK(nilpotency_class(lmlt6()) == 2);
  CHECK_FALSE(nilpotency_class(symmetric3()).has_value());
}

TEST_CASE("center") {
  std::vector<Perm> cyc{Perm{1, 2, 3, 0}};
  auto z4 = closure(4, cyc);
  CHECK(center(z4) == z4);
  CHECK(center(lmlt6()) == rmlt(example6()));
  CHECK(center(symmetric3()).is_trivial());
}

TEST_CASE("orbits") {
  CHECK(orbits(PermGroup(4)) == Partition::discrete(4));
  CHECK(orbits(lmlt6()).to_string() == "{{0,1},{2,3,4,5}}");
  CHECK(orbits(rmlt(example6())).to_string() == "{{0},{1},{2,3},{4,5}}");
}

TEST_CASE("commuting groups") {
  std::vector<Perm> cyc{Perm{1, 2, 3, 0}};
  auto z4 = closure(4, cyc);
  CHECK(groups_commute(z4, z4));
  CHECK(groups_commute(lmlt6(), rmlt(example6())));
  CHECK_FALSE(groups_commute(symmetric3(), symmetric3()));
  CHECK_THROWS_AS(groups_commute(z4, symmetric3()), Error);
}

TEST_CASE("normal subgroups") {
  auto g = symmetric3();
  std::vector<Perm> rot{Perm{1, 2, 0}};
  std::vector<Perm> swap{Perm{1, 0, 2}};
  CHECK(is_normal_subgroup(closure(3, rot), g));
  CHECK_FALSE(is_normal_subgroup(closure(3, swap), g));
  CHECK(is_subgroup(closure(3, swap), g));
}
