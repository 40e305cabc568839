#include <birack/birack.hpp>
#include <birack/census.hpp>
#include <birack/constructors.hpp>
#include <birack/error.hpp>
#include <birack/groups.hpp>

#include "doctest.h"
#include "support.hpp"

using namespace birack;

namespace {

Table dihedral_rack(std::size_t n) {
  Table t(n, std::vector<point>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) t[x][y] = static_cast<point>((2 * x + n - y) % n);
  return t;
}

Table trivial_op(std::size_t n) {
  Table t(n, std::vector<point>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) t[x][y] = static_cast<point>(y);
  return t;
}

Table transpose(Table const& t) {
  Table out = t;
  for (std::size_t x = 0; x < t.size(); ++x)
    for (std::size_t y = 0; y < t.size(); ++y) out[x][y] = t[y][x];
  return out;
}

}  // namespace

TEST_CASE("permutational biracks") {
  CHECK(permutational(Perm::identity(3), Perm::identity(3)) == projection(3));
  Perm f{1, 2, 3, 0};
  auto b = permutational(f, f * f);
  CHECK(is_permutational(b));
  CHECK(b.circ(2, 1) == 2);
  CHECK(b.bullet(1, 3) == 3);
  CHECK_THROWS_AS(permutational(Perm{1, 0, 2}, Perm{0, 2, 1}), Error);
  CHECK_THROWS_AS(permutational(Perm{1, 0}, Perm{0, 2, 1}), Error);
  try {
    permutational(Perm{1, 0, 2}, Perm{0, 2, 1});
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::NonCommuting);
  }
}

TEST_CASE("projection") {
  auto p = projection(3);
  CHECK(is_projection(p));
  CHECK(p.circ(0, 2) == 2);
  CHECK(p.bullet(0, 2) == 0);
}

TEST_CASE("racks and derived biracks") {
  SUBCASE("trivial rack gives the projection birack") {
    CHECK(left_derived(Rack::left(trivial_op(3))) == projection(3));
  }
  SUBCASE("dihedral rack on three points") {
    auto r = Rack::left(dihedral_rack(3));
    auto b = left_derived(r);
    CHECK_FALSE(is_projection(b));
    CHECK(is_left_derived(b));
    CHECK(oracle::braid(support::tables(b)));
    CHECK(lmlt(b).order() == 6);
  }
  SUBCASE("non-racks are rejected") {
    Table op{{1, 2, 0}, {0, 1, 2}, {0, 1, 2}};
    CHECK_THROWS_AS(Rack::left(op), Error);
    CHECK_THROWS_AS(Rack::left({{0, 0}, {1, 1}}), Error);
    CHECK_THROWS_AS(left_derived(Rack::right(transpose(dihedral_rack(3)))), Error);
    CHECK_THROWS_AS(right_derived(Rack::left(dihedral_rack(3))), Error);
  }
  SUBCASE("every derived birack of a small rack validates") {
    for (auto const& r : left_racks(3)) {
      auto b = left_derived(r);
      CHECK(oracle::braid(support::tables(b)));
      for (auto const& x : right_translations(b)) CHECK(x.is_identity());
    }
    for (auto const& r : right_racks(3)) {
      CHECK(oracle::braid(support::tables(right_derived(r))));
    }
  }
}

TEST_CASE("products") {
  auto b = example6();
  CHECK(product(projection(1), b) == b);
  CHECK(product(projection(2), projection(3)) == projection(6));

  auto l = left_derived(Rack::left(dihedral_rack(3)));
  auto r = right_derived(Rack::right(transpose(dihedral_rack(3))));
  auto p = product(l, r);
  CHECK(is_distributive(p));
  CHECK(mlt(p).order() == lmlt(l).order() * rmlt(r).order());
  CHECK(oracle::braid(support::tables(p)));
}

TEST_CASE("wada biracks") {
  auto e8 = wada(elementary_abelian(3));
  CHECK(is_projection(e8));
  auto q = wada(quaternion8());
  CHECK(is_distributive(q));
  CHECK_FALSE(is_involutive(q));
  CHECK_FALSE(is_distributive(wada(cyclic(8))));
  for (auto const& g : {cyclic(4), cyclic(6), dihedral(6), quaternion8()}) {
    auto w = wada(g);
    CHECK(oracle::braid(support::tables(w)));
    for (point x = 0; x < g.order(); ++x) {
      for (point y = 0; y < g.order(); ++y) {
        CHECK(w.circ(x, y) == g.mul(g.mul(x, g.inv(y)), g.inv(x)));
        CHECK(w.bullet(x, y) == g.mul(x, g.mul(y, y)));
      }
    }
  }
}

TEST_CASE("the six-point example") {
  auto b = example6();
  CHECK(b.size() == 6);
  CHECK(right_translation(b, 0).is_identity());
  CHECK(right_translation(b, 1).is_identity());
  CHECK(left_translation(b, 2) == Perm::from_cycles(6, {{0, 1}, {4, 5}}));
  CHECK(left_translation(b, 3) == Perm::from_cycles(6, {{0, 1}, {4, 5}}));
  CHECK(oracle::braid(support::tables(b)));
}
