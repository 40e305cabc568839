#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "birack/birack.hpp"
#include "birack/partition.hpp"

namespace birack {

enum class CongruenceKind { sim, bsim, approx, join, custom };

struct Congruence {
  Partition classes;
  CongruenceKind kind = CongruenceKind::custom;
};

// a ~ b iff L_a = L_b.
Congruence sim(Birack const& b);
// a ~ b iff R_a = R_b.
Congruence bsim(Birack const& b);
// Both translations agree: the common refinement of sim and bsim.
Congruence approx(Birack const& b);

// Compatibility of the partition with all four operations.
bool is_congruence(Birack const& b, Partition const& p);

// Least congruence containing both. Throws NotACongruence if either input
// is not a congruence of `b`.
Congruence join(Birack const& b, Congruence const& c1, Congruence const& c2);

// Classes are numbered in order of their least element. Throws
// NotACongruence.
Birack quotient(Birack const& b, Partition const& p);
inline Birack quotient(Birack const& b, Congruence const& c) {
  return quotient(b, c.classes);
}

// Left derived birack on X/sim; throws NotLeftDistributive.
Birack lret(Birack const& b);
// Right derived birack on X/bsim; throws NotRightDistributive.
Birack rret(Birack const& b);
// X/approx.
Birack ret(Birack const& b);

enum class RetractKind { left, right, full };

struct RetractTower {
  RetractKind kind;
  std::vector<Birack> stages;  // stages[0] is the input
  bool stabilized = false;     // stopped above size 1
  std::optional<std::size_t> level;

  // |stage k|; beyond the last stage the size is constant.
  std::size_t size_at(std::size_t k) const;
};

// Iterates the retract until size 1 or until a step fails to shrink the
// carrier. With `max_steps` the iteration also stops after that many steps,
// in which case `level` is set only if size 1 was reached.
RetractTower tower(Birack const& b, RetractKind kind,
                   std::optional<std::size_t> max_steps = std::nullopt);

// Least k with |Ret^k(X)| = 1, or empty for a non-multipermutation birack.
std::optional<std::size_t> multipermutation_level(Birack const& b);

// Exhaustive tuple checks; m >= 1 (InvalidInput otherwise).
//   left  m-reductive:   (..((x0 o x1) o x2)..) o xm = (..(x1 o x2)..) o xm
//   right m-reductive:   x0 * (.. * (x_{m-1} * xm)) = x0 * (.. * (x_{m-2} * x_{m-1}))
//   left  m-permutational: (..((x o x1) o x2)..) o xm = (..((y o x1) ..) o xm
//   right m-permutational: x0 * (.. * (x_{m-1} * x)) = x0 * (.. * (x_{m-1} * y))
bool is_left_m_reductive(Birack const& b, std::size_t m);
bool is_right_m_reductive(Birack const& b, std::size_t m);
bool is_left_m_permutational(Birack const& b, std::size_t m);
bool is_right_m_permutational(Birack const& b, std::size_t m);

inline bool is_m_reductive(Birack const& b, std::size_t m) {
  return is_left_m_reductive(b, m) && is_right_m_reductive(b, m);
}
inline bool is_m_permutational(Birack const& b, std::size_t m) {
  return is_left_m_permutational(b, m) && is_right_m_permutational(b, m);
}

// Number of tuple evaluations the checks above perform: n^(m+1).
double reductivity_cost(std::size_t n, std::size_t m);

}  // namespace birack
