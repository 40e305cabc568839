#include "birack/perm_group.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <string>
#include <unordered_set>

#include "birack/error.hpp"

namespace birack {

std::size_t group_cap() {
  if (char const* env = std::getenv("BIRACK_GROUP_CAP")) {
    char* end = nullptr;
    unsigned long long const value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) {
      return static_cast<std::size_t>(value);
    }
  }
  return default_closure_cap;
}

PermGroup::PermGroup(std::size_t degree)
    : _degree(degree), _elements{Perm::identity(degree)} {}

bool PermGroup::is_abelian() const {
  for (std::size_t i = 0; i < _generators.size(); ++i) {
    for (std::size_t j = i + 1; j < _generators.size(); ++j) {
      if (_generators[i] * _generators[j] != _generators[j] * _generators[i]) {
        return false;
      }
    }
  }
  return true;
}

bool PermGroup::contains(Perm const& p) const {
  return std::binary_search(_elements.begin(), _elements.end(), p);
}

PermGroup closure(std::size_t degree, std::span<Perm const> generators,
                  std::size_t cap) {
  PermGroup group(degree);
  for (Perm const& g : generators) {
    if (g.degree() != degree) {
      throw Error(ErrorKind::DegreeMismatch,
                  "generator of degree " + std::to_string(g.degree()) +
                      " in a group of degree " + std::to_string(degree));
    }
    if (!g.is_identity() &&
        std::find(group._generators.begin(), group._generators.end(), g) ==
            group._generators.end()) {
      group._generators.push_back(g);
    }
  }

  // Every element of a finite group is a positive word in the generators,
  // so left multiplication by generators reaches the whole group.
  std::unordered_set<Perm, PermHash> seen{Perm::identity(degree)};
  std::deque<Perm> frontier{Perm::identity(degree)};
  while (!frontier.empty()) {
    Perm const current = std::move(frontier.front());
    frontier.pop_front();
    for (Perm const& g : group._generators) {
      Perm next = g * current;
      if (seen.insert(next).second) {
        if (seen.size() > cap) {
          throw Error(ErrorKind::CapExceeded,
                      "group closure exceeded " + std::to_string(cap) +
                          " elements");
        }
        frontier.push_back(std::move(next));
      }
    }
  }
  group._elements.assign(seen.begin(), seen.end());
  std::sort(group._elements.begin(), group._elements.end());
  return group;
}

PermGroup closure(std::size_t degree, std::span<Perm const> generators) {
  return closure(degree, generators, group_cap());
}

namespace {

// The subgroup generated by `candidates`, adding a candidate as a generator
// only when it is not yet in the subgroup built so far.
PermGroup generated_by(std::size_t degree, std::vector<Perm> const& candidates) {
  std::vector<Perm> gens;
  PermGroup current(degree);
  for (Perm const& c : candidates) {
    if (!current.contains(c)) {
      gens.push_back(c);
      current = closure(degree, gens);
    }
  }
  return current;
}

void require_same_degree(PermGroup const& a, PermGroup const& b) {
  if (a.degree() != b.degree()) {
    throw Error(ErrorKind::DegreeMismatch, "groups act on different degrees");
  }
}

}  // namespace

bool is_subgroup(PermGroup const& h, PermGroup const& g) {
  if (h.degree() != g.degree()) {
    return false;
  }
  return std::includes(g.elements().begin(), g.elements().end(),
                       h.elements().begin(), h.elements().end());
}

bool is_normal_subgroup(PermGroup const& h, PermGroup const& g) {
  if (!is_subgroup(h, g)) {
    return false;
  }
  for (Perm const& x : g.elements()) {
    Perm const x_inv = x.inverse();
    for (Perm const& y : h.elements()) {
      if (!h.contains(x * y * x_inv)) {
        return false;
      }
    }
  }
  return true;
}

PermGroup commutator_subgroup(PermGroup const& h, PermGroup const& g) {
  require_same_degree(h, g);
  if (!is_subgroup(h, g)) {
    throw Error(ErrorKind::NotSubgroup, "H is not contained in G");
  }
  std::unordered_set<Perm, PermHash> seen;
  std::vector<Perm> commutators;
  for (Perm const& x : h.elements()) {
    Perm const x_inv = x.inverse();
    for (Perm const& y : g.elements()) {
      Perm c = x_inv * y.inverse() * x * y;
      if (!c.is_identity() && seen.insert(c).second) {
        commutators.push_back(std::move(c));
      }
    }
  }
  std::sort(commutators.begin(), commutators.end());
  return generated_by(h.degree(), commutators);
}

std::vector<PermGroup> lower_central_series(PermGroup const& g,
                                            std::size_t cap_steps) {
  std::vector<PermGroup> series{g};
  while (true) {
    PermGroup next = commutator_subgroup(series.back(), g);
    if (next == series.back()) {
      return series;
    }
    if (series.size() >= cap_steps) {
      throw Error(ErrorKind::CapExceeded,
                  "lower central series did not stabilize within " +
                      std::to_string(cap_steps) + " steps");
    }
    series.push_back(std::move(next));
  }
}

std::optional<std::size_t> nilpotency_class(PermGroup const& g) {
  auto const series = lower_central_series(g);
  if (!series.back().is_trivial()) {
    return std::nullopt;
  }
  return series.size() - 1;
}

PermGroup center(PermGroup const& g) {
  std::vector<Perm> central;
  for (Perm const& x : g.elements()) {
    bool commutes = true;
    for (Perm const& gen : g.generators()) {
      if (x * gen != gen * x) {
        commutes = false;
        break;
      }
    }
    if (commutes && !x.is_identity()) {
      central.push_back(x);
    }
  }
  return generated_by(g.degree(), central);
}

Partition orbits(std::size_t degree, std::span<Perm const> generators) {
  std::vector<std::size_t> label(degree);
  std::iota(label.begin(), label.end(), std::size_t{0});
  // Least reachable point; orbits of finite groups are closed under the
  // generators alone.
  bool changed = true;
  while (changed) {
    changed = false;
    for (Perm const& g : generators) {
      for (point x = 0; x < degree; ++x) {
        point const y = g(x);
        std::size_t const low = std::min(label[x], label[y]);
        if (label[x] != low || label[y] != low) {
          label[x] = label[y] = low;
          changed = true;
        }
      }
    }
  }
  return Partition::from_labels(label);
}

Partition orbits(PermGroup const& g) {
  return orbits(g.degree(), g.generators());
}

bool groups_commute(PermGroup const& a, PermGroup const& b) {
  require_same_degree(a, b);
  for (Perm const& x : a.generators()) {
    for (Perm const& y : b.generators()) {
      if (x * y != y * x) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace birack
