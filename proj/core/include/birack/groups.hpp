#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "birack/perm.hpp"

namespace birack {

// An abstract finite group by multiplication table. Elements are
// 0..order-1 and element 0 is always the identity.
class FiniteGroup {
 public:
  // Throws InvalidInput unless `table` is a group table with identity 0.
  FiniteGroup(std::string name, std::vector<std::vector<point>> const& table);

  std::string const& name() const noexcept { return _name; }
  std::size_t order() const noexcept { return _order; }
  point identity() const noexcept { return 0; }
  point mul(point a, point b) const noexcept { return _mul[a * _order + b]; }
  point inv(point a) const noexcept { return _inv[a]; }
  point pow(point a, long long e) const;

  bool is_abelian() const;
  std::size_t exponent() const;
  std::vector<point> center() const;
  bool in_center(point a) const;

 private:
  std::string _name;
  std::size_t _order;
  std::vector<point> _mul;
  std::vector<point> _inv;
};

inline constexpr std::size_t max_catalog_order = 64;

// Z<n>: element i is the residue i.
FiniteGroup cyclic(std::size_t n);
// E<2^k>: element i is the bit vector of i, multiplication is xor.
FiniteGroup elementary_abelian(std::size_t k);
// D<2m>: element i < m is r^i, element m + i is s r^i, with s r = r^-1 s.
FiniteGroup dihedral(std::size_t order);
// Q8: 0 = 1, 1 = -1, 2 = i, 3 = -i, 4 = j, 5 = -j, 6 = k, 7 = -k.
FiniteGroup quaternion8();
// (a, b) is element a * |G2| + b.
FiniteGroup direct_product(FiniteGroup const& g1, FiniteGroup const& g2);

// Catalog names: "Z<n>", "E<2^k>", "D<2m>", "Q8", joined by 'x' for direct
// products ("Z4xZ2"). Throws InvalidInput for unknown names or orders above
// max_catalog_order.
FiniteGroup parse_group(std::string_view name);

}  // namespace birack
