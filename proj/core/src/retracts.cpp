#include "birack/retracts.hpp"

#include <cmath>

#include "birack/constructors.hpp"
#include "birack/error.hpp"

namespace birack {

namespace {

std::vector<point> row_of(Birack const& b, point x) {
  std::vector<point> row(b.size());
  for (point a = 0; a < b.size(); ++a) {
    row[a] = b.circ(x, a);
  }
  return row;
}

std::vector<point> column_of(Birack const& b, point x) {
  std::vector<point> col(b.size());
  for (point a = 0; a < b.size(); ++a) {
    col[a] = b.bullet(a, x);
  }
  return col;
}

}  // namespace

Congruence sim(Birack const& b) {
  std::vector<std::vector<point>> labels;
  for (point x = 0; x < b.size(); ++x) {
    labels.push_back(row_of(b, x));
  }
  return {Partition::from_labels(labels), CongruenceKind::sim};
}

Congruence bsim(Birack const& b) {
  std::vector<std::vector<point>> labels;
  for (point x = 0; x < b.size(); ++x) {
    labels.push_back(column_of(b, x));
  }
  return {Partition::from_labels(labels), CongruenceKind::bsim};
}

Congruence approx(Birack const& b) {
  return {meet(sim(b).classes, bsim(b).classes), CongruenceKind::approx};
}

bool is_congruence(Birack const& b, Partition const& p) {
  std::size_t const n = b.size();
  if (p.base_size() != n) {
    return false;
  }
  using Op = point (Birack::*)(point, point) const noexcept;
  static constexpr Op ops[] = {&Birack::circ, &Birack::circ_div,
                               &Birack::bullet, &Birack::bullet_div};
  // a ~ a' implies a op b ~ a' op b and b op a ~ b op a'; compatibility in
  // both arguments follows by transitivity.
  for (auto const& block : p.blocks()) {
    point const rep = block.front();
    for (point a : block) {
      for (point c = 0; c < n; ++c) {
        for (Op op : ops) {
          if (!p.same_block((b.*op)(rep, c), (b.*op)(a, c)) ||
              !p.same_block((b.*op)(c, rep), (b.*op)(c, a))) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

Congruence join(Birack const& b, Congruence const& c1, Congruence const& c2) {
  if (!is_congruence(b, c1.classes) || !is_congruence(b, c2.classes)) {
    throw Error(ErrorKind::NotACongruence, "join needs two congruences of the same birack");
  }
  Partition joined = join(c1.classes, c2.classes);
  if (!is_congruence(b, joined)) {
    throw Error(ErrorKind::NotACongruence, "transitive closure is not compatible");
  }
  return {std::move(joined), CongruenceKind::join};
}

Birack quotient(Birack const& b, Partition const& p) {
  if (!is_congruence(b, p)) {
    throw Error(ErrorKind::NotACongruence, "partition " + p.to_string() +
                                               " is not compatible with the operations");
  }
  std::size_t const k = p.size();
  Table circ(k, std::vector<point>(k));
  Table bullet(k, std::vector<point>(k));
  for (std::size_t i = 0; i < k; ++i) {
    point const a = p.blocks()[i].front();
    for (std::size_t j = 0; j < k; ++j) {
      point const c = p.blocks()[j].front();
      circ[i][j] = static_cast<point>(p.block_of(b.circ(a, c)));
      bullet[i][j] = static_cast<point>(p.block_of(b.bullet(a, c)));
    }
  }
  return validate(circ, bullet);
}

Birack lret(Birack const& b) {
  if (!is_left_distributive(b)) {
    throw Error(ErrorKind::NotLeftDistributive, "the left retract needs a left distributive birack");
  }
  Birack const q = quotient(b, sim(b));
  return left_derived(Rack::left(q.circ_table()));
}

Birack rret(Birack const& b) {
  if (!is_right_distributive(b)) {
    throw Error(ErrorKind::NotRightDistributive, "the right retract needs a right distributive birack");
  }
  Birack const q = quotient(b, bsim(b));
  return right_derived(Rack::right(q.bullet_table()));
}

Birack ret(Birack const& b) { return quotient(b, approx(b)); }

std::size_t RetractTower::size_at(std::size_t k) const {
  return k < stages.size() ? stages[k].size() : stages.back().size();
}

RetractTower tower(Birack const& b, RetractKind kind,
                   std::optional<std::size_t> max_steps) {
  RetractTower t{kind, {b}, false, std::nullopt};
  auto const step = [kind](Birack const& x) {
    switch (kind) {
      case RetractKind::left: return lret(x);
      case RetractKind::right: return rret(x);
      case RetractKind::full: break;
    }
    return ret(x);
  };
  while (t.stages.back().size() > 1) {
    if (max_steps && t.stages.size() > *max_steps) {
      break;
    }
    Birack next = step(t.stages.back());
    if (next.size() == t.stages.back().size()) {
      t.stabilized = true;
      break;
    }
    t.stages.push_back(std::move(next));
  }
  if (t.stages.back().size() == 1) {
    t.level = t.stages.size() - 1;
  }
  return t;
}

std::optional<std::size_t> multipermutation_level(Birack const& b) {
  return tower(b, RetractKind::full).level;
}

double reductivity_cost(std::size_t n, std::size_t m) {
  return std::pow(static_cast<double>(n), static_cast<double>(m + 1));
}

namespace {

void require_m(std::size_t m) {
  if (m == 0) {
    throw Error(ErrorKind::InvalidInput, "m-reductivity and m-permutationality need m >= 1");
  }
}

template <typename Step>
bool pair_descend(std::size_t n, point a, point b, std::size_t left,
                  Step const& step) {
  if (left == 0) {
    return a == b;
  }
  for (point t = 0; t < n; ++t) {
    if (!pair_descend(n, step(a, t), step(b, t), left - 1, step)) {
      return false;
    }
  }
  return true;
}

// For every starting pair (a, b) = first(s, t) with s, t in X and every
// sequence of `depth` further elements, folding `step` into a and b gives the
// same result.
template <typename First, typename Step>
bool pairs_collapse(std::size_t n, std::size_t depth, First const& first,
                    Step const& step) {
  for (point s = 0; s < n; ++s) {
    for (point t = 0; t < n; ++t) {
      auto const [a, b] = first(s, t);
      if (!pair_descend(n, a, b, depth, step)) {
        return false;
      }
    }
  }
  return true;
}

template <typename Step>
bool values_descend(std::vector<point> const& values, std::size_t left,
                    Step const& step) {
  std::size_t const n = values.size();
  if (left == 0) {
    for (point v : values) {
      if (v != values.front()) {
        return false;
      }
    }
    return true;
  }
  std::vector<point> next(n);
  for (point t = 0; t < n; ++t) {
    for (std::size_t i = 0; i < n; ++i) {
      next[i] = step(values[i], t);
    }
    if (!values_descend(next, left - 1, step)) {
      return false;
    }
  }
  return true;
}

// For every sequence of `depth` elements, folding `step` over it sends every
// starting point to the same value.
template <typename Step>
bool all_collapse(std::size_t n, std::size_t depth, Step const& step) {
  std::vector<point> start(n);
  for (point x = 0; x < n; ++x) {
    start[x] = x;
  }
  return values_descend(start, depth, step);
}

}  // namespace

bool is_left_m_reductive(Birack const& b, std::size_t m) {
  require_m(m);
  return pairs_collapse(
      b.size(), m - 1,
      [&](point x0, point x1) { return std::pair{b.circ(x0, x1), x1}; },
      [&](point a, point t) { return b.circ(a, t); });
}

bool is_right_m_reductive(Birack const& b, std::size_t m) {
  require_m(m);
  // innermost first: (x_{m-1} * x_m, x_{m-1}), then x_{m-2}, ..., x_0 on the left
  return pairs_collapse(
      b.size(), m - 1,
      [&](point inner, point last) { return std::pair{b.bullet(inner, last), inner}; },
      [&](point a, point t) { return b.bullet(t, a); });
}

bool is_left_m_permutational(Birack const& b, std::size_t m) {
  require_m(m);
  return all_collapse(b.size(), m, [&](point a, point t) { return b.circ(a, t); });
}

bool is_right_m_permutational(Birack const& b, std::size_t m) {
  require_m(m);
  return all_collapse(b.size(), m, [&](point a, point t) { return b.bullet(t, a); });
}

}  // namespace birack
