#include "birack/groups.hpp"

#include <charconv>
#include <numeric>
#include <optional>

#include "birack/error.hpp"

namespace birack {

FiniteGroup::FiniteGroup(std::string name,
                         std::vector<std::vector<point>> const& table)
    : _name(std::move(name)), _order(table.size()) {
  std::size_t const n = _order;
  if (n == 0) {
    throw Error(ErrorKind::InvalidInput, "a group needs at least one element");
  }
  _mul.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n || !is_bijection(table[a])) {
      throw Error(ErrorKind::InvalidInput, _name + ": rows must be permutations");
    }
    for (std::size_t b = 0; b < n; ++b) {
      _mul[a * n + b] = table[a][b];
    }
  }
  for (point a = 0; a < n; ++a) {
    if (mul(0, a) != a || mul(a, 0) != a) {
      throw Error(ErrorKind::InvalidInput, _name + ": element 0 is not the identity");
    }
  }
  for (point a = 0; a < n; ++a) {
    for (point b = 0; b < n; ++b) {
      for (point c = 0; c < n; ++c) {
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
          throw Error(ErrorKind::InvalidInput, _name + ": multiplication is not associative");
        }
      }
    }
  }
  _inv.resize(n);
  for (point a = 0; a < n; ++a) {
    for (point b = 0; b < n; ++b) {
      if (mul(a, b) == 0) {
        _inv[a] = b;
      }
    }
    if (mul(_inv[a], a) != 0) {
      throw Error(ErrorKind::InvalidInput, _name + ": missing two-sided inverse");
    }
  }
}

point FiniteGroup::pow(point a, long long e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  point result = 0;
  for (long long i = 0; i < e; ++i) {
    result = mul(result, a);
  }
  return result;
}

bool FiniteGroup::is_abelian() const {
  for (point a = 0; a < _order; ++a) {
    for (point b = 0; b < _order; ++b) {
      if (mul(a, b) != mul(b, a)) {
        return false;
      }
    }
  }
  return true;
}

std::size_t FiniteGroup::exponent() const {
  std::size_t e = 1;
  for (point a = 0; a < _order; ++a) {
    std::size_t order_of_a = 1;
    for (point p = a; p != 0; p = mul(p, a)) {
      ++order_of_a;
    }
    e = std::lcm(e, order_of_a);
  }
  return e;
}

bool FiniteGroup::in_center(point a) const {
  for (point b = 0; b < _order; ++b) {
    if (mul(a, b) != mul(b, a)) {
      return false;
    }
  }
  return true;
}

std::vector<point> FiniteGroup::center() const {
  std::vector<point> out;
  for (point a = 0; a < _order; ++a) {
    if (in_center(a)) {
      out.push_back(a);
    }
  }
  return out;
}

namespace {

using Table = std::vector<std::vector<point>>;

Table square(std::size_t n) { return Table(n, std::vector<point>(n)); }

void require_catalog_order(std::size_t order) {
  if (order == 0 || order > max_catalog_order) {
    throw Error(ErrorKind::InvalidInput,
                "catalog groups have order 1.." + std::to_string(max_catalog_order));
  }
}

}  // namespace

FiniteGroup cyclic(std::size_t n) {
  require_catalog_order(n);
  Table t = square(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      t[a][b] = static_cast<point>((a + b) % n);
    }
  }
  return FiniteGroup("Z" + std::to_string(n), t);
}

FiniteGroup elementary_abelian(std::size_t k) {
  if (k > 6) {
    throw Error(ErrorKind::InvalidInput,
                "catalog groups have order 1.." + std::to_string(max_catalog_order));
  }
  std::size_t const n = std::size_t{1} << k;
  Table t = square(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      t[a][b] = static_cast<point>(a ^ b);
    }
  }
  return FiniteGroup("E" + std::to_string(n), t);
}

FiniteGroup dihedral(std::size_t order) {
  require_catalog_order(order);
  if (order % 2 != 0) {
    throw Error(ErrorKind::InvalidInput, "dihedral groups have even order");
  }
  std::size_t const m = order / 2;
  Table t = square(order);
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) {
      bool const sa = a >= m;
      bool const sb = b >= m;
      std::size_t const i = a % m;
      std::size_t const j = b % m;
      // r^i r^j = r^{i+j}; r^i s r^j = s r^{j-i}; s r^i r^j = s r^{i+j};
      // s r^i s r^j = r^{j-i}
      std::size_t const rot = sb ? (j + m - i) % m : (i + j) % m;
      bool const reflect = sa != sb;
      t[a][b] = static_cast<point>(reflect ? m + rot : rot);
    }
  }
  return FiniteGroup("D" + std::to_string(order), t);
}

FiniteGroup quaternion8() {
  // unit index u in {1, i, j, k} = {0, 1, 2, 3}; element 2u + s has sign s
  static constexpr int unit_mul[4][4] = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int unit_sign[4][4] = {
      {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  Table t = square(8);
  for (std::size_t a = 0; a < 8; ++a) {
    for (std::size_t b = 0; b < 8; ++b) {
      std::size_t const ua = a / 2;
      std::size_t const ub = b / 2;
      std::size_t const sign = (a % 2 + b % 2 + unit_sign[ua][ub]) % 2;
      t[a][b] = static_cast<point>(2 * unit_mul[ua][ub] + sign);
    }
  }
  return FiniteGroup("Q8", t);
}

FiniteGroup direct_product(FiniteGroup const& g1, FiniteGroup const& g2) {
  std::size_t const n2 = g2.order();
  std::size_t const n = g1.order() * n2;
  require_catalog_order(n);
  Table t = square(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      point const first = g1.mul(static_cast<point>(a / n2), static_cast<point>(b / n2));
      point const second = g2.mul(static_cast<point>(a % n2), static_cast<point>(b % n2));
      t[a][b] = static_cast<point>(first * n2 + second);
    }
  }
  return FiniteGroup(g1.name() + "x" + g2.name(), t);
}

namespace {

FiniteGroup parse_factor(std::string_view token) {
  if (token == "Q8") {
    return quaternion8();
  }
  if (token.size() < 2) {
    throw Error(ErrorKind::InvalidInput, "unknown group name '" + std::string(token) + "'");
  }
  std::size_t value = 0;
  auto const digits = token.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || value == 0) {
    throw Error(ErrorKind::InvalidInput, "unknown group name '" + std::string(token) + "'");
  }
  require_catalog_order(value);
  switch (token.front()) {
    case 'Z':
      return cyclic(value);
    case 'E': {
      if ((value & (value - 1)) != 0) {
        throw Error(ErrorKind::InvalidInput, "E<n> needs n a power of two");
      }
      std::size_t k = 0;
      while ((std::size_t{1} << k) < value) {
        ++k;
      }
      return elementary_abelian(k);
    }
    case 'D':
      return dihedral(value);
    default:
      throw Error(ErrorKind::InvalidInput, "unknown group name '" + std::string(token) + "'");
  }
}

}  // namespace

FiniteGroup parse_group(std::string_view name) {
  std::size_t start = 0;
  std::optional<FiniteGroup> result;
  while (true) {
    std::size_t const pos = name.find('x', start);
    auto const token = name.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start);
    FiniteGroup factor = parse_factor(token);
    result = result ? direct_product(*result, factor) : std::move(factor);
    if (pos == std::string_view::npos) {
      break;
    }
    start = pos + 1;
  }
  return *result;
}

}  // namespace birack
