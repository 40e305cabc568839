#include "birack/solution.hpp"

#include <array>

#include "birack/error.hpp"
#include "birack/retracts.hpp"

namespace birack {

void check_shape(Solution const& s) {
  if (s.n == 0 || s.sigma.size() != s.n || s.tau.size() != s.n) {
    throw Error(ErrorKind::InvalidInput, "solution tables must be n x n with n >= 1");
  }
  for (Table const* t : {&s.sigma, &s.tau}) {
    for (auto const& row : *t) {
      if (row.size() != s.n) {
        throw Error(ErrorKind::InvalidInput, "solution tables must be square");
      }
      for (point v : row) {
        if (v >= s.n) {
          throw Error(ErrorKind::InvalidInput, "solution table entry out of range");
        }
      }
    }
  }
}

Solution from_birack(Birack const& b) {
  std::size_t const n = b.size();
  Solution s{n, Table(n, std::vector<point>(n)), Table(n, std::vector<point>(n))};
  for (point x = 0; x < n; ++x) {
    for (point y = 0; y < n; ++y) {
      s.sigma[x][y] = b.circ(x, y);
      s.tau[y][x] = b.bullet(x, y);
    }
  }
  return s;
}

bool is_non_degenerate(Solution const& s) {
  check_shape(s);
  for (std::size_t i = 0; i < s.n; ++i) {
    if (!is_bijection(s.sigma[i]) || !is_bijection(s.tau[i])) {
      return false;
    }
  }
  return true;
}

bool braid_check(Solution const& s) {
  check_shape(s);
  using Triple = std::array<point, 3>;
  auto const r12 = [&](Triple t) {
    auto const [u, v] = s(t[0], t[1]);
    return Triple{u, v, t[2]};
  };
  auto const r23 = [&](Triple t) {
    auto const [u, v] = s(t[1], t[2]);
    return Triple{t[0], u, v};
  };
  for (point x = 0; x < s.n; ++x) {
    for (point y = 0; y < s.n; ++y) {
      for (point z = 0; z < s.n; ++z) {
        Triple const t{x, y, z};
        if (r23(r12(r23(t))) != r12(r23(r12(t)))) {
          return false;
        }
      }
    }
  }
  return true;
}

Birack to_birack(Solution const& s) {
  if (!is_non_degenerate(s)) {
    throw Error(ErrorKind::Degenerate, "some sigma_x or tau_y is not a bijection");
  }
  if (!braid_check(s)) {
    throw Error(ErrorKind::BraidViolation, "r does not satisfy the braid relation");
  }
  Table bullet(s.n, std::vector<point>(s.n));
  for (point x = 0; x < s.n; ++x) {
    for (point y = 0; y < s.n; ++y) {
      bullet[x][y] = s.tau[y][x];
    }
  }
  try {
    return validate(s.sigma, bullet);
  } catch (AxiomViolation const& e) {
    throw Error(ErrorKind::SelfCheckMismatch,
                std::string("braid relation holds but birack axioms fail: ") + e.what());
  }
}

bool is_involutive_solution(Solution const& s) {
  check_shape(s);
  for (point x = 0; x < s.n; ++x) {
    for (point y = 0; y < s.n; ++y) {
      auto const [u, v] = s(x, y);
      if (s(u, v) != std::pair{x, y}) {
        return false;
      }
    }
  }
  return true;
}

bool is_square_free(Solution const& s) {
  check_shape(s);
  for (point x = 0; x < s.n; ++x) {
    if (s(x, x) != std::pair{x, x}) {
      return false;
    }
  }
  return true;
}

bool is_derived_solution(Solution const& s) {
  check_shape(s);
  auto const all_identity = [&](Table const& t) {
    for (auto const& row : t) {
      for (point i = 0; i < s.n; ++i) {
        if (row[i] != i) {
          return false;
        }
      }
    }
    return true;
  };
  return all_identity(s.sigma) || all_identity(s.tau);
}

namespace {

std::vector<Perm> generators(Solution const& s) {
  if (!is_non_degenerate(s)) {
    throw Error(ErrorKind::Degenerate, "some sigma_x or tau_y is not a bijection");
  }
  std::vector<Perm> gens;
  for (auto const& row : s.sigma) {
    gens.emplace_back(row);
  }
  for (auto const& row : s.tau) {
    gens.emplace_back(row);
  }
  return gens;
}

}  // namespace

bool is_distributive_solution(Solution const& s) {
  auto const gens = generators(s);
  // Compositions and inverses of maps with this property keep it, so the
  // generators of the Yang-Baxter group suffice.
  for (Perm const& eta : gens) {
    for (point x = 0; x < s.n; ++x) {
      point const ex = eta(x);
      for (point y = 0; y < s.n; ++y) {
        if (eta(s.sigma[x][y]) != s.sigma[ex][eta(y)] ||
            eta(s.tau[x][y]) != s.tau[ex][eta(y)]) {
          return false;
        }
      }
    }
  }
  return true;
}

PermGroup yang_baxter_group(Solution const& s, std::size_t cap) {
  return closure(s.n, generators(s), cap);
}

PermGroup yang_baxter_group(Solution const& s) {
  return yang_baxter_group(s, group_cap());
}

Solution solution_retract(Solution const& s) {
  return from_birack(ret(to_birack(s)));
}

std::optional<std::size_t> solution_mpl(Solution const& s) {
  return multipermutation_level(to_birack(s));
}

}  // namespace birack
