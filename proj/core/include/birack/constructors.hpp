#pragma once

#include <cstddef>

#include "birack/birack.hpp"
#include "birack/groups.hpp"

namespace birack {

enum class Side { left, right };

// A one-sided rack. For side == left, `op` is a left quasigroup satisfying
// x(yz) = (xy)(xz); for side == right, a right quasigroup with
// (yz)x = (yx)(zx).
class Rack {
 public:
  // Throw NotARack on failure.
  static Rack left(Table const& op);
  static Rack right(Table const& op);

  std::size_t size() const noexcept { return _op.size(); }
  Side side() const noexcept { return _side; }
  Table const& op() const noexcept { return _op; }
  // left: x \ y solving x u = y; right: x / y solving u y = x.
  Table const& div() const noexcept { return _div; }

  // Left translations y -> x op y for a left rack, right translations
  // y -> y op x for a right rack.
  std::vector<Perm> translations() const;

 private:
  Rack(Side side, Table op, Table div);

  Side _side;
  Table _op;
  Table _div;
};

// x o y = f(y), x * y = g(x). Throws NonCommuting unless fg = gf, and
// DegreeMismatch if the degrees differ.
Birack permutational(Perm const& f, Perm const& g);
// x o y = y, x * y = x.
Birack projection(std::size_t n);

// x o y from the rack, x * y = x. Throws NotARack for a right rack.
Birack left_derived(Rack const& r);
// x o y = y, x * y from the rack. Throws NotARack for a left rack.
Birack right_derived(Rack const& r);

// Componentwise operations; (a, b) is element a * |b2| + b.
Birack product(Birack const& b1, Birack const& b2);

// x o y = x y^-1 x^-1, x * y = x y^2.
Birack wada(FiniteGroup const& g);

// The birack with x o' y = y * x and x *' y = y o x: the conjugate of the
// solution by the coordinate flip. Left notions on mirror(b) are right
// notions on b.
Birack mirror(Birack const& b);

// The six-element non-involutive distributive birack given by
//   L1 = (3 5 4 6), L2 = (6 4 5 3), L3 = L4 = (1 2)(5 6), L5 = L6 = (1 2)(3 4),
//   R1 = R2 = id, R3 = R4 = R5 = R6 = (3 4)(5 6)
// in 1-indexed cycle notation; stored 0-indexed.
Birack example6();

}  // namespace birack
