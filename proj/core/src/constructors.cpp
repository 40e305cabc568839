#include "birack/constructors.hpp"

#include "birack/error.hpp"

namespace birack {

namespace {

Table square(std::size_t n) { return Table(n, std::vector<point>(n)); }

bool square_in_range(Table const& t) {
  for (auto const& row : t) {
    if (row.size() != t.size()) {
      return false;
    }
    for (point v : row) {
      if (v >= t.size()) {
        return false;
      }
    }
  }
  return !t.empty();
}

}  // namespace

Rack::Rack(Side side, Table op, Table div)
    : _side(side), _op(std::move(op)), _div(std::move(div)) {}

Rack Rack::left(Table const& op) {
  if (!square_in_range(op)) {
    throw Error(ErrorKind::NotARack, "rack table must be square with entries in range");
  }
  std::size_t const n = op.size();
  Table div = square(n);
  for (point x = 0; x < n; ++x) {
    if (!is_bijection(op[x])) {
      throw Error(ErrorKind::NotARack, "row " + std::to_string(x) + " is not a bijection");
    }
    for (point y = 0; y < n; ++y) {
      div[x][op[x][y]] = y;
    }
  }
  for (point x = 0; x < n; ++x) {
    for (point y = 0; y < n; ++y) {
      for (point z = 0; z < n; ++z) {
        if (op[x][op[y][z]] != op[op[x][y]][op[x][z]]) {
          throw Error(ErrorKind::NotARack, "operation is not left distributive");
        }
      }
    }
  }
  return Rack(Side::left, op, std::move(div));
}

Rack Rack::right(Table const& op) {
  if (!square_in_range(op)) {
    throw Error(ErrorKind::NotARack, "rack table must be square with entries in range");
  }
  std::size_t const n = op.size();
  Table div = square(n);
  for (point y = 0; y < n; ++y) {
    std::vector<point> column(n);
    for (point x = 0; x < n; ++x) {
      column[x] = op[x][y];
    }
    if (!is_bijection(column)) {
      throw Error(ErrorKind::NotARack, "column " + std::to_string(y) + " is not a bijection");
    }
    for (point x = 0; x < n; ++x) {
      div[op[x][y]][y] = x;
    }
  }
  for (point x = 0; x < n; ++x) {
    for (point y = 0; y < n; ++y) {
      for (point z = 0; z < n; ++z) {
        if (op[op[y][z]][x] != op[op[y][x]][op[z][x]]) {
          throw Error(ErrorKind::NotARack, "operation is not right distributive");
        }
      }
    }
  }
  return Rack(Side::right, op, std::move(div));
}

std::vector<Perm> Rack::translations() const {
  std::size_t const n = size();
  std::vector<Perm> out;
  for (point x = 0; x < n; ++x) {
    std::vector<point> images(n);
    for (point y = 0; y < n; ++y) {
      images[y] = _side == Side::left ? _op[x][y] : _op[y][x];
    }
    out.emplace_back(std::move(images));
  }
  return out;
}

Birack permutational(Perm const& f, Perm const& g) {
  if (f.degree() != g.degree()) {
    throw Error(ErrorKind::DegreeMismatch, "f and g act on different sets");
  }
  if (f * g != g * f) {
    throw Error(ErrorKind::NonCommuting, "f and g do not commute");
  }
  std::size_t const n = f.degree();
  Table circ = square(n);
  Table bullet = square(n);
  for (point x = 0; x < n; ++x) {
    for (point y = 0; y < n; ++y) {
      circ[x][y] = f(y);
      bullet[x][y] = g(x);
    }
  }
  return validate(circ, bullet);
}

Birack projection(std::size_t n) {
  if (n == 0) {
    throw Error(ErrorKind::InvalidInput, "a birack needs a nonempty carrier");
  }
  return permutational(Perm::identity(n), Perm::identity(n));
}

Birack left_derived(Rack const& r) {
  if (r.side() != Side::left) {
    throw Error(ErrorKind::NotARack, "left derived birack needs a left rack");
  }
  std::size_t const n = r.size();
  Table bullet = square(n);
  for (point x = 0; x < n; ++x) {
    for (point y = 0; y < n; ++y) {
      bullet[x][y] = x;
    }
  }
  return validate(r.op(), bullet);
}

Birack right_derived(Rack const& r) {
  if (r.side() != Side::right) {
    throw Error(ErrorKind::NotARack, "right derived birack needs a right rack");
  }
  std::size_t const n = r.size();
  Table circ = square(n);
  for (point x = 0; x < n; ++x) {
    for (point y = 0; y < n; ++y) {
      circ[x][y] = y;
    }
  }
  return validate(circ, r.op());
}

Birack product(Birack const& b1, Birack const& b2) {
  std::size_t const n2 = b2.size();
  std::size_t const n = b1.size() * n2;
  Table circ = square(n);
  Table bullet = square(n);
  for (point a = 0; a < n; ++a) {
    for (point b = 0; b < n; ++b) {
      point const a1 = a / n2, a2 = a % n2;
      point const b1_ = b / n2, b2_ = b % n2;
      circ[a][b] = b1.circ(a1, b1_) * n2 + b2.circ(a2, b2_);
      bullet[a][b] = b1.bullet(a1, b1_) * n2 + b2.bullet(a2, b2_);
    }
  }
  return validate(circ, bullet);
}

Birack wada(FiniteGroup const& g) {
  std::size_t const n = g.order();
  Table circ = square(n);
  Table bullet = square(n);
  for (point x = 0; x < n; ++x) {
    for (point y = 0; y < n; ++y) {
      circ[x][y] = g.mul(g.mul(x, g.inv(y)), g.inv(x));
      bullet[x][y] = g.mul(x, g.mul(y, y));
    }
  }
  return validate(circ, bullet);
}

Birack mirror(Birack const& b) {
  std::size_t const n = b.size();
  Table circ = square(n);
  Table bullet = square(n);
  for (point x = 0; x < n; ++x) {
    for (point y = 0; y < n; ++y) {
      circ[x][y] = b.bullet(y, x);
      bullet[x][y] = b.circ(y, x);
    }
  }
  return validate(circ, bullet);
}

Birack example6() {
  using Cycles = std::vector<std::vector<point>>;
  auto const cyc = [](Cycles const& c) { return Perm::from_cycles(6, c, true); };
  Perm const id = Perm::identity(6);
  std::vector<Perm> const left = {
      cyc({{3, 5, 4, 6}}),       cyc({{6, 4, 5, 3}}),
      cyc({{1, 2}, {5, 6}}),     cyc({{1, 2}, {5, 6}}),
      cyc({{1, 2}, {3, 4}}),     cyc({{1, 2}, {3, 4}}),
  };
  Perm const r3 = cyc({{3, 4}, {5, 6}});
  std::vector<Perm> const right = {id, id, r3, r3, r3, r3};

  Table circ = square(6);
  Table bullet = square(6);
  for (point x = 0; x < 6; ++x) {
    for (point a = 0; a < 6; ++a) {
      circ[x][a] = left[x](a);
      bullet[a][x] = right[x](a);
    }
  }
  return validate(circ, bullet);
}

}  // namespace birack
