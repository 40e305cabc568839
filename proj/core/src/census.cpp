#include "birack/census.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "birack/error.hpp"
#include "birack/retracts.hpp"

namespace birack {

namespace {

void require_size(std::size_t n, std::size_t max, char const* what) {
  if (n == 0 || n > max) {
    throw Error(ErrorKind::SizeTooLarge, std::string(what) + " supports 1 <= n <= " +
                                             std::to_string(max) + ", got " +
                                             std::to_string(n));
  }
}

// Visits every n-tuple of indices into [0, base) in lexicographic order.
template <typename Visit>
void for_each_index_tuple(std::size_t n, std::size_t base, Visit const& visit) {
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    visit(idx);
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (++idx[pos] < base) {
        break;
      }
      idx[pos] = 0;
      if (pos == 0) {
        return;
      }
    }
    if (n == 0) {
      return;
    }
  }
}

Table rows_table(std::vector<Perm> const& perms, std::vector<std::size_t> const& idx) {
  Table t;
  for (std::size_t i : idx) {
    auto const images = perms[i].images();
    t.emplace_back(images.begin(), images.end());
  }
  return t;
}

Table columns_table(std::vector<Perm> const& perms, std::vector<std::size_t> const& idx) {
  std::size_t const n = idx.size();
  Table t(n, std::vector<point>(n));
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t x = 0; x < n; ++x) {
      t[x][y] = perms[idx[y]](static_cast<point>(x));
    }
  }
  return t;
}

std::vector<Table> row_tables(std::size_t n) {
  auto const perms = all_permutations(n);
  std::vector<Table> out;
  for_each_index_tuple(n, perms.size(), [&](auto const& idx) {
    out.push_back(rows_table(perms, idx));
  });
  return out;
}

std::vector<Table> column_tables(std::size_t n) {
  auto const perms = all_permutations(n);
  std::vector<Table> out;
  for_each_index_tuple(n, perms.size(), [&](auto const& idx) {
    out.push_back(columns_table(perms, idx));
  });
  return out;
}

}  // namespace

CensusEntry census_entry(Birack const& b) {
  return {b, classify(b), multipermutation_level(b)};
}

std::vector<Perm> all_permutations(std::size_t n) {
  std::vector<point> images(n);
  std::iota(images.begin(), images.end(), point{0});
  std::vector<Perm> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

void for_each_table_pair(std::size_t n,
                         std::function<void(Table const&, Table const&)> const& visit) {
  require_size(n, max_full_census, "full table enumeration");
  auto const circs = row_tables(n);
  auto const bullets = column_tables(n);
  for (Table const& circ : circs) {
    for (Table const& bullet : bullets) {
      visit(circ, bullet);
    }
  }
}

void for_each_birack(std::size_t n, std::function<void(Birack const&)> const& visit) {
  for_each_table_pair(n, [&](Table const& circ, Table const& bullet) {
    if (!find_axiom_violation(circ, bullet)) {
      visit(validate(circ, bullet));
    }
  });
}

std::vector<Birack> all_biracks(std::size_t n) {
  std::vector<Birack> out;
  for_each_birack(n, [&](Birack const& b) { out.push_back(b); });
  return out;
}

std::vector<Rack> left_racks(std::size_t n) {
  require_size(n, max_rack_census, "rack enumeration");
  std::vector<Rack> out;
  for (Table const& t : row_tables(n)) {
    bool ok = true;
    for (point x = 0; ok && x < n; ++x) {
      for (point y = 0; ok && y < n; ++y) {
        for (point z = 0; z < n; ++z) {
          if (t[x][t[y][z]] != t[t[x][y]][t[x][z]]) {
            ok = false;
            break;
          }
        }
      }
    }
    if (ok) {
      out.push_back(Rack::left(t));
    }
  }
  return out;
}

std::vector<Rack> right_racks(std::size_t n) {
  require_size(n, max_rack_census, "rack enumeration");
  std::vector<Rack> out;
  for (Table const& t : column_tables(n)) {
    bool ok = true;
    for (point x = 0; ok && x < n; ++x) {
      for (point y = 0; ok && y < n; ++y) {
        for (point z = 0; z < n; ++z) {
          if (t[t[y][z]][x] != t[t[y][x]][t[z][x]]) {
            ok = false;
            break;
          }
        }
      }
    }
    if (ok) {
      out.push_back(Rack::right(t));
    }
  }
  return out;
}

std::vector<Birack> distributive_biracks(std::size_t n) {
  require_size(n, max_distributive_census, "distributive enumeration");
  auto const lefts = left_racks(n);
  auto const rights = right_racks(n);
  std::vector<Birack> out;
  for (Rack const& l : lefts) {
    Table const& c = l.op();
    for (Rack const& r : rights) {
      Table const& b = r.op();
      bool ok = true;
      for (point x = 0; ok && x < n; ++x) {
        for (point y = 0; ok && y < n; ++y) {
          for (point z = 0; z < n; ++z) {
            if (c[b[x][y]][z] != c[x][z] || b[x][c[y][z]] != b[x][z] ||
                c[x][b[y][z]] != b[c[x][y]][z]) {
              ok = false;
              break;
            }
          }
        }
      }
      if (!ok) {
        continue;
      }
      if (auto v = find_axiom_violation(c, b)) {
        throw Error(ErrorKind::SelfCheckMismatch,
                    "rack pair passes the distributive characterisation but fails identity " +
                        std::to_string(v->equation));
      }
      out.push_back(validate(c, b));
    }
  }
  return out;
}

Birack canonical_form(Birack const& b) {
  std::size_t const n = b.size();
  std::vector<point> best;
  for (Perm const& p : all_permutations(n)) {
    // relabel x -> p(x): new_op(p(x), p(y)) = p(op(x, y))
    Perm const inv = p.inverse();
    std::vector<point> flat(2 * n * n);
    for (point x = 0; x < n; ++x) {
      for (point y = 0; y < n; ++y) {
        flat[x * n + y] = p(b.circ(inv(x), inv(y)));
        flat[n * n + x * n + y] = p(b.bullet(inv(x), inv(y)));
      }
    }
    if (best.empty() || flat < best) {
      best = std::move(flat);
    }
  }
  Table circ(n, std::vector<point>(n));
  Table bullet(n, std::vector<point>(n));
  for (point x = 0; x < n; ++x) {
    for (point y = 0; y < n; ++y) {
      circ[x][y] = best[x * n + y];
      bullet[x][y] = best[n * n + x * n + y];
    }
  }
  return validate(circ, bullet);
}

std::vector<Birack> dedupe(std::vector<Birack> const& biracks) {
  std::set<std::pair<Table, Table>> seen;
  std::vector<Birack> out;
  for (Birack const& b : biracks) {
    Birack const c = canonical_form(b);
    if (seen.emplace(c.circ_table(), c.bullet_table()).second) {
      out.push_back(b);
    }
  }
  return out;
}

namespace {

std::vector<CensusEntry> entries(std::vector<Birack> const& biracks, bool deduplicate) {
  std::vector<CensusEntry> out;
  for (Birack const& b : deduplicate ? dedupe(biracks) : biracks) {
    out.push_back(census_entry(b));
  }
  return out;
}

}  // namespace

std::vector<CensusEntry> enumerate_biracks(std::size_t n, bool deduplicate) {
  return entries(all_biracks(n), deduplicate);
}

std::vector<CensusEntry> enumerate_distributive(std::size_t n, bool deduplicate) {
  return entries(distributive_biracks(n), deduplicate);
}

}  // namespace birack
