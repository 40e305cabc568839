#include "birack/birack.hpp"

#include <string>

#include "birack/error.hpp"

namespace birack {

namespace {

void check_square(Table const& t, std::size_t n, char const* name) {
  if (t.size() != n) {
    throw Error(ErrorKind::InvalidInput, std::string(name) + " table has the wrong number of rows");
  }
  for (auto const& row : t) {
    if (row.size() != n) {
      throw Error(ErrorKind::InvalidInput, std::string(name) + " table is not square");
    }
    for (point v : row) {
      if (v >= n) {
        throw Error(ErrorKind::InvalidInput, std::string(name) + " table entry out of range");
      }
    }
  }
}

Table to_table(std::vector<point> const& flat, std::size_t n) {
  Table t(n, std::vector<point>(n));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      t[x][y] = flat[x * n + y];
    }
  }
  return t;
}

}  // namespace

std::optional<Violation> find_axiom_violation(Table const& circ,
                                              Table const& bullet) {
  std::size_t const n = circ.size();
  for (point x = 0; x < n; ++x) {
    for (point y = 0; y < n; ++y) {
      point const xy_c = circ[x][y];
      point const xy_b = bullet[x][y];
      for (point z = 0; z < n; ++z) {
        point const yz_c = circ[y][z];
        point const yz_b = bullet[y][z];
        point const inner = circ[xy_b][z];
        if (circ[x][yz_c] != circ[xy_c][inner]) {
          return Violation{1, {x, y, z}};
        }
        if (bullet[xy_c][inner] != circ[bullet[x][yz_c]][yz_b]) {
          return Violation{2, {x, y, z}};
        }
        if (bullet[xy_b][z] != bullet[bullet[x][yz_c]][yz_b]) {
          return Violation{3, {x, y, z}};
        }
      }
    }
  }
  return std::nullopt;
}

Birack validate(Table const& circ, Table const& bullet) {
  std::size_t const n = circ.size();
  if (n == 0) {
    throw Error(ErrorKind::InvalidInput, "a birack needs a nonempty carrier");
  }
  check_square(circ, n, "circ");
  check_square(bullet, n, "bullet");

  Birack b;
  b._n = n;
  b._circ.resize(n * n);
  b._circ_div.resize(n * n);
  b._bullet.resize(n * n);
  b._bullet_div.resize(n * n);
  for (point x = 0; x < n; ++x) {
    if (!is_bijection(circ[x])) {
      throw Error(ErrorKind::NotLeftQuasigroup,
                  "row " + std::to_string(x) + " of circ is not a bijection");
    }
    for (point y = 0; y < n; ++y) {
      b._circ[x * n + y] = circ[x][y];
      b._circ_div[x * n + circ[x][y]] = y;
    }
  }
  for (point y = 0; y < n; ++y) {
    std::vector<point> column(n);
    for (point x = 0; x < n; ++x) {
      column[x] = bullet[x][y];
    }
    if (!is_bijection(column)) {
      throw Error(ErrorKind::NotRightQuasigroup,
                  "column " + std::to_string(y) + " of bullet is not a bijection");
    }
    for (point x = 0; x < n; ++x) {
      b._bullet[x * n + y] = bullet[x][y];
      b._bullet_div[bullet[x][y] * n + y] = x;
    }
  }
  if (auto v = find_axiom_violation(circ, bullet)) {
    throw AxiomViolation(v->equation, v->witness);
  }
  return b;
}

Table Birack::circ_table() const { return to_table(_circ, _n); }
Table Birack::bullet_table() const { return to_table(_bullet, _n); }

Perm left_translation(Birack const& b, point x) {
  std::vector<point> images(b.size());
  for (point y = 0; y < b.size(); ++y) {
    images[y] = b.circ(x, y);
  }
  return Perm(std::move(images));
}

Perm right_translation(Birack const& b, point x) {
  std::vector<point> images(b.size());
  for (point a = 0; a < b.size(); ++a) {
    images[a] = b.bullet(a, x);
  }
  return Perm(std::move(images));
}

std::vector<Perm> left_translations(Birack const& b) {
  std::vector<Perm> out;
  out.reserve(b.size());
  for (point x = 0; x < b.size(); ++x) {
    out.push_back(left_translation(b, x));
  }
  return out;
}

std::vector<Perm> right_translations(Birack const& b) {
  std::vector<Perm> out;
  out.reserve(b.size());
  for (point x = 0; x < b.size(); ++x) {
    out.push_back(right_translation(b, x));
  }
  return out;
}

PermGroup lmlt(Birack const& b, std::size_t cap) {
  return closure(b.size(), left_translations(b), cap);
}
PermGroup rmlt(Birack const& b, std::size_t cap) {
  return closure(b.size(), right_translations(b), cap);
}
PermGroup mlt(Birack const& b, std::size_t cap) {
  auto gens = left_translations(b);
  auto right = right_translations(b);
  gens.insert(gens.end(), right.begin(), right.end());
  return closure(b.size(), gens, cap);
}
PermGroup lmlt(Birack const& b) { return lmlt(b, group_cap()); }
PermGroup rmlt(Birack const& b) { return rmlt(b, group_cap()); }
PermGroup mlt(Birack const& b) { return mlt(b, group_cap()); }

namespace route {

bool left_distributive_identity(Birack const& b) {
  std::size_t const n = b.size();
  for (point x = 0; x < n; ++x) {
    for (point y = 0; y < n; ++y) {
      for (point z = 0; z < n; ++z) {
        if (b.circ(x, b.circ(y, z)) != b.circ(b.circ(x, y), b.circ(x, z))) {
          return false;
        }
      }
    }
  }
  return true;
}

bool right_distributive_identity(Birack const& b) {
  std::size_t const n = b.size();
  for (point x = 0; x < n; ++x) {
    for (point y = 0; y < n; ++y) {
      for (point z = 0; z < n; ++z) {
        if (b.bullet(b.bullet(y, z), x) !=
            b.bullet(b.bullet(y, x), b.bullet(z, x))) {
          return false;
        }
      }
    }
  }
  return true;
}

namespace {

bool same_left(Birack const& b, point x, point y) {
  for (point a = 0; a < b.size(); ++a) {
    if (b.circ(x, a) != b.circ(y, a)) {
      return false;
    }
  }
  return true;
}

bool same_right(Birack const& b, point x, point y) {
  for (point a = 0; a < b.size(); ++a) {
    if (b.bullet(a, x) != b.bullet(a, y)) {
      return false;
    }
  }
  return true;
}

}  // namespace

bool left_translation_criterion(Birack const& b) {
  for (point x = 0; x < b.size(); ++x) {
    for (point y = 0; y < b.size(); ++y) {
      if (!same_left(b, x, b.bullet(x, y))) {
        return false;
      }
    }
  }
  return true;
}

bool right_translation_criterion(Birack const& b) {
  for (point x = 0; x < b.size(); ++x) {
    for (point y = 0; y < b.size(); ++y) {
      if (!same_right(b, x, b.circ(y, x))) {
        return false;
      }
    }
  }
  return true;
}

bool left_orbit_criterion(Birack const& b) {
  Partition const orb = orbits(b.size(), right_translations(b));
  for (auto const& block : orb.blocks()) {
    for (point x : block) {
      if (!same_left(b, block.front(), x)) {
        return false;
      }
    }
  }
  return true;
}

bool right_orbit_criterion(Birack const& b) {
  Partition const orb = orbits(b.size(), left_translations(b));
  for (auto const& block : orb.blocks()) {
    for (point x : block) {
      if (!same_right(b, block.front(), x)) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace route

namespace {

bool agree(bool a, bool b, bool c, char const* what) {
  if (a != b || b != c) {
    throw Error(ErrorKind::SelfCheckMismatch,
                std::string(what) + ": identity " + (a ? "true" : "false") +
                    ", translation criterion " + (b ? "true" : "false") +
                    ", orbit criterion " + (c ? "true" : "false"));
  }
  return a;
}

}  // namespace

bool is_left_distributive(Birack const& b) {
  return agree(route::left_distributive_identity(b),
               route::left_translation_criterion(b),
               route::left_orbit_criterion(b), "left distributivity");
}

bool is_right_distributive(Birack const& b) {
  return agree(route::right_distributive_identity(b),
               route::right_translation_criterion(b),
               route::right_orbit_criterion(b), "right distributivity");
}

bool is_distributive(Birack const& b) {
  return is_left_distributive(b) && is_right_distributive(b);
}

bool is_distributive_alt(Birack const& b) {
  if (!route::left_distributive_identity(b) ||
      !route::right_distributive_identity(b)) {
    return false;
  }
  std::size_t const n = b.size();
  for (point x = 0; x < n; ++x) {
    for (point y = 0; y < n; ++y) {
      for (point z = 0; z < n; ++z) {
        if (b.circ(b.bullet(x, y), z) != b.circ(x, z)) {
          return false;
        }
        if (b.bullet(x, b.circ(y, z)) != b.bullet(x, z)) {
          return false;
        }
        if (b.circ(x, b.bullet(y, z)) != b.bullet(b.circ(x, y), z)) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_involutive(Birack const& b) {
  for (point x = 0; x < b.size(); ++x) {
    for (point y = 0; y < b.size(); ++y) {
      point const u = b.circ(x, y);
      point const v = b.bullet(x, y);
      if (b.circ(u, v) != x || b.bullet(u, v) != y) {
        return false;
      }
    }
  }
  return true;
}

bool is_idempotent(Birack const& b) {
  for (point x = 0; x < b.size(); ++x) {
    if (b.circ(x, x) != x || b.bullet(x, x) != x) {
      return false;
    }
  }
  return true;
}

bool is_permutational(Birack const& b) {
  for (point x = 1; x < b.size(); ++x) {
    for (point a = 0; a < b.size(); ++a) {
      if (b.circ(x, a) != b.circ(0, a) || b.bullet(a, x) != b.bullet(a, 0)) {
        return false;
      }
    }
  }
  return true;
}

bool is_projection(Birack const& b) {
  for (point x = 0; x < b.size(); ++x) {
    for (point y = 0; y < b.size(); ++y) {
      if (b.circ(x, y) != y || b.bullet(x, y) != x) {
        return false;
      }
    }
  }
  return true;
}

bool is_left_derived(Birack const& b) {
  for (point x = 0; x < b.size(); ++x) {
    for (point y = 0; y < b.size(); ++y) {
      if (b.bullet(x, y) != x) {
        return false;
      }
    }
  }
  return true;
}

bool is_right_derived(Birack const& b) {
  for (point x = 0; x < b.size(); ++x) {
    for (point y = 0; y < b.size(); ++y) {
      if (b.circ(x, y) != y) {
        return false;
      }
    }
  }
  return true;
}

bool is_automorphism(Birack const& b, Perm const& alpha) {
  if (alpha.degree() != b.size()) {
    throw Error(ErrorKind::DegreeMismatch, "automorphism candidate has the wrong degree");
  }
  for (point x = 0; x < b.size(); ++x) {
    for (point y = 0; y < b.size(); ++y) {
      if (alpha(b.circ(x, y)) != b.circ(alpha(x), alpha(y)) ||
          alpha(b.circ_div(x, y)) != b.circ_div(alpha(x), alpha(y)) ||
          alpha(b.bullet(x, y)) != b.bullet(alpha(x), alpha(y)) ||
          alpha(b.bullet_div(x, y)) != b.bullet_div(alpha(x), alpha(y))) {
        return false;
      }
    }
  }
  return true;
}

bool translations_are_automorphisms(Birack const& b) {
  for (point x = 0; x < b.size(); ++x) {
    if (!is_automorphism(b, left_translation(b, x)) ||
        !is_automorphism(b, right_translation(b, x))) {
      return false;
    }
  }
  return true;
}

GroupFingerprint fingerprint(PermGroup const& g) {
  return {g.order(), nilpotency_class(g), g.is_abelian()};
}

PropertyReport classify(Birack const& b, std::size_t cap) {
  PropertyReport r{};
  r.size = b.size();
  r.involutive = is_involutive(b);
  r.idempotent = is_idempotent(b);
  r.square_free = r.idempotent;
  r.left_distributive = is_left_distributive(b);
  r.right_distributive = is_right_distributive(b);
  r.distributive = r.left_distributive && r.right_distributive;
  r.permutational = is_permutational(b);
  r.projection = is_projection(b);
  r.left_derived = is_left_derived(b);
  r.right_derived = is_right_derived(b);
  r.lmlt = fingerprint(lmlt(b, cap));
  r.rmlt = fingerprint(rmlt(b, cap));
  r.mlt = fingerprint(mlt(b, cap));
  return r;
}

PropertyReport classify(Birack const& b) { return classify(b, group_cap()); }

}  // namespace birack
