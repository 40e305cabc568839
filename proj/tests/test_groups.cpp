#include <set>

#include <birack/error.hpp>
#include <birack/groups.hpp>

#include "doctest.h"

using namespace birack;

namespace {

std::size_t brute_exponent(FiniteGroup const& g) {
  std::size_t e = 1;
  for (std::size_t k = 1;; ++k) {
    bool all = true;
    for (point a = 0; a < g.order(); ++a) {
      point p = 0;
      for (std::size_t i = 0; i < k; ++i) p = g.mul(p, a);
      all = all && p == 0;
    }
    if (all) {
      e = k;
      break;
    }
  }
  return e;
}

std::size_t brute_center(FiniteGroup const& g) {
  std::size_t count = 0;
  for (point a = 0; a < g.order(); ++a) {
    bool c = true;
    for (point b = 0; b < g.order(); ++b) c = c && g.mul(a, b) == g.mul(b, a);
    count += c;
  }
  return count;
}

}  // namespace

TEST_CASE("catalog groups") {
  CHECK(cyclic(1).order() == 1);
  auto q = quaternion8();
  CHECK(q.order() == 8);
  CHECK_FALSE(q.is_abelian());
  CHECK(q.center().size() == 2);
  CHECK(q.center().size() == brute_center(q));
  CHECK(q.exponent() == 4);
  CHECK(q.exponent() == brute_exponent(q));
  CHECK(q.mul(2, 4) == 6);  // ij = k
  CHECK(q.mul(4, 2) == 7);  // ji = -k

  auto z4z2 = direct_product(cyclic(4), cyclic(2));
  CHECK(z4z2.order() == 8);
  CHECK(z4z2.is_abelian());
  CHECK(z4z2.exponent() == 4);
  CHECK(brute_exponent(z4z2) == 4);

  auto d8 = dihedral(8);
  CHECK_FALSE(d8.is_abelian());
  CHECK(d8.center().size() == brute_center(d8));
  CHECK(d8.exponent() == 4);
  CHECK(elementary_abelian(3).exponent() == 2);
  CHECK(cyclic(8).exponent() == 8);
  CHECK(cyclic(5).pow(2, -1) == 3);
}

TEST_CASE("parse_group") {
  CHECK(parse_group("Z4xZ2").order() == 8);
  CHECK(parse_group("E8").exponent() == 2);
  CHECK(parse_group("D8").order() == 8);
  CHECK(parse_group("Q8").center().size() == 2);
  CHECK(parse_group("Q8xZ2").order() == 16);
  CHECK_THROWS_AS(parse_group("Foo"), Error);
  CHECK_THROWS_AS(parse_group("E6"), Error);
  CHECK_THROWS_AS(parse_group("D7"), Error);
  CHECK_THROWS_AS(parse_group("Z65"), Error);
  CHECK_THROWS_AS(parse_group("Z8xZ8xZ2"), Error);
}

TEST_CASE("table validation") {
  CHECK_THROWS_AS(FiniteGroup("bad", {{0, 1}, {1, 1}}), Error);
  CHECK_THROWS_AS(FiniteGroup("bad", {{1, 0}, {0, 1}}), Error);
  CHECK_NOTHROW(FiniteGroup("z2", {{0, 1}, {1, 0}}));
}
