#pragma once

#include <cstddef>
#include <optional>
#include <utility>

#include "birack/birack.hpp"
#include "birack/perm_group.hpp"

namespace birack {

// A map r(x, y) = (sigma_x(y), tau_y(x)) on X x X. sigma[x][y] is
// sigma_x(y); tau[y][x] is tau_y(x). Nothing is assumed about the tables
// beyond shape and range.
struct Solution {
  std::size_t n = 0;
  Table sigma;
  Table tau;

  std::pair<point, point> operator()(point x, point y) const {
    return {sigma[x][y], tau[y][x]};
  }
};

// Throws InvalidInput for ragged or out-of-range tables.
void check_shape(Solution const& s);

// sigma_x = L_x, tau_y = R_y, i.e. r(x, y) = (x o y, x * y).
Solution from_birack(Birack const& b);
// Throws Degenerate or BraidViolation.
Birack to_birack(Solution const& s);

bool is_non_degenerate(Solution const& s);
// (id x r)(r x id)(id x r) = (r x id)(id x r)(r x id) on all of X^3.
bool braid_check(Solution const& s);
bool is_involutive_solution(Solution const& s);
bool is_square_free(Solution const& s);
// All sigma_x or all tau_y are the identity.
bool is_derived_solution(Solution const& s);

// eta sigma_x = sigma_{eta(x)} eta and eta tau_x = tau_{eta(x)} eta for eta
// ranging over the generators sigma_y, tau_y. Throws Degenerate.
bool is_distributive_solution(Solution const& s);

// <sigma_x, tau_y>. Throws Degenerate or CapExceeded.
PermGroup yang_baxter_group(Solution const& s);
PermGroup yang_baxter_group(Solution const& s, std::size_t cap);

Solution solution_retract(Solution const& s);
std::optional<std::size_t> solution_mpl(Solution const& s);

}  // namespace birack
