#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "birack/perm.hpp"
#include "birack/perm_group.hpp"

namespace birack {

// Square Cayley table, row-major: table[x][y] is x op y.
using Table = std::vector<std::vector<point>>;

// `equation` numbers the mixed identities in the order validate tries them:
//   1: x o (y o z) = (x o y) o ((x * y) o z)
//   2: (x o y) * ((x * y) o z) = (x * (y o z)) o (y * z)
//   3: (x * y) * z = (x * (y o z)) * (y * z)
struct Violation {
  int equation;
  std::array<point, 3> witness;
};

// A finite birack (X, o, \o, *, /*) on X = {0..n-1}. Only `validate` and the
// library's constructors produce one, so every instance satisfies the birack
// axioms. The two division tables are always derived, never supplied.
class Birack {
 public:
  std::size_t size() const noexcept { return _n; }

  point circ(point x, point y) const noexcept { return _circ[x * _n + y]; }
  point circ_div(point x, point y) const noexcept {
    return _circ_div[x * _n + y];
  }
  point bullet(point x, point y) const noexcept { return _bullet[x * _n + y]; }
  point bullet_div(point x, point y) const noexcept {
    return _bullet_div[x * _n + y];
  }

  Table circ_table() const;
  Table bullet_table() const;

  friend bool operator==(Birack const& a, Birack const& b) {
    return a._n == b._n && a._circ == b._circ && a._bullet == b._bullet;
  }

 private:
  friend Birack validate(Table const&, Table const&);
  Birack() = default;

  std::size_t _n = 0;
  std::vector<point> _circ;
  std::vector<point> _circ_div;
  std::vector<point> _bullet;
  std::vector<point> _bullet_div;
};

// Checks shape and range, then bijectivity of every row of `circ` and every
// column of `bullet`, then the three mixed identities over all triples.
// Throws InvalidInput, NotLeftQuasigroup, NotRightQuasigroup or
// AxiomViolation.
Birack validate(Table const& circ, Table const& bullet);

// Non-throwing core of `validate` for enumeration. Assumes the tables are
// square, in range, and that circ rows and bullet columns are bijective.
std::optional<Violation> find_axiom_violation(Table const& circ,
                                              Table const& bullet);

Perm left_translation(Birack const& b, point x);
Perm right_translation(Birack const& b, point x);
std::vector<Perm> left_translations(Birack const& b);
std::vector<Perm> right_translations(Birack const& b);

PermGroup lmlt(Birack const& b, std::size_t cap);
PermGroup rmlt(Birack const& b, std::size_t cap);
PermGroup mlt(Birack const& b, std::size_t cap);
PermGroup lmlt(Birack const& b);
PermGroup rmlt(Birack const& b);
PermGroup mlt(Birack const& b);

// Left distributivity decided three ways: the raw identity
// x o (y o z) = (x o y) o (x o z); the criterion L_x = L_{x * y}; and
// constancy of L on the orbits of RMlt. Throws SelfCheckMismatch if the
// routes disagree.
bool is_left_distributive(Birack const& b);
// Dual: (y * z) * x = (y * x) * (z * x); R_x = R_{y o x}; R constant on
// LMlt orbits.
bool is_right_distributive(Birack const& b);
bool is_distributive(Birack const& b);

// The individual routes, exposed for cross-checking.
namespace route {
bool left_distributive_identity(Birack const& b);
bool left_translation_criterion(Birack const& b);
bool left_orbit_criterion(Birack const& b);
bool right_distributive_identity(Birack const& b);
bool right_translation_criterion(Birack const& b);
bool right_orbit_criterion(Birack const& b);
}  // namespace route

// (X, o) is a left rack, (X, *) is a right rack, and
//   (x * y) o z = x o z,  x * (y o z) = x * z,  x o (y * z) = (x o y) * z.
bool is_distributive_alt(Birack const& b);

bool is_involutive(Birack const& b);
bool is_idempotent(Birack const& b);
inline bool is_square_free(Birack const& b) { return is_idempotent(b); }
bool is_permutational(Birack const& b);
bool is_projection(Birack const& b);
bool is_left_derived(Birack const& b);
bool is_right_derived(Birack const& b);

// `alpha` preserves all four operations.
bool is_automorphism(Birack const& b, Perm const& alpha);
bool translations_are_automorphisms(Birack const& b);

struct GroupFingerprint {
  std::size_t order;
  std::optional<std::size_t> nilpotency_class;
  bool abelian;
};

GroupFingerprint fingerprint(PermGroup const& g);

struct PropertyReport {
  std::size_t size;
  bool involutive;
  bool idempotent;
  bool square_free;
  bool left_distributive;
  bool right_distributive;
  bool distributive;
  bool permutational;
  bool projection;
  bool left_derived;
  bool right_derived;
  GroupFingerprint lmlt;
  GroupFingerprint rmlt;
  GroupFingerprint mlt;
};

PropertyReport classify(Birack const& b);
PropertyReport classify(Birack const& b, std::size_t cap);

}  // namespace birack
