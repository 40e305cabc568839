#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "birack/partition.hpp"
#include "birack/perm.hpp"

namespace birack {

inline constexpr std::size_t default_closure_cap = 20160;

// The closure cap used when the caller does not pass one: BIRACK_GROUP_CAP
// if set to a positive integer, otherwise default_closure_cap.
std::size_t group_cap();

// A finite permutation group with its full element set materialized.
// Elements are kept sorted lexicographically by image sequence, so two equal
// groups compare equal element-for-element.
class PermGroup {
 public:
  // The trivial group of the given degree.
  explicit PermGroup(std::size_t degree = 1);

  std::size_t degree() const noexcept { return _degree; }
  std::size_t order() const noexcept { return _elements.size(); }
  std::vector<Perm> const& generators() const noexcept { return _generators; }
  std::vector<Perm> const& elements() const noexcept { return _elements; }

  bool is_trivial() const noexcept { return _elements.size() == 1; }
  bool is_abelian() const;
  bool contains(Perm const& p) const;

  friend bool operator==(PermGroup const& a, PermGroup const& b) {
    return a._degree == b._degree && a._elements == b._elements;
  }

 private:
  friend PermGroup closure(std::size_t, std::span<Perm const>, std::size_t);

  std::size_t _degree;
  std::vector<Perm> _generators;
  std::vector<Perm> _elements;
};

// Smallest group containing `generators`, found by breadth-first search.
// Throws DegreeMismatch if a generator has the wrong degree, CapExceeded if
// more than `cap` elements turn up.
PermGroup closure(std::size_t degree, std::span<Perm const> generators,
                  std::size_t cap);
PermGroup closure(std::size_t degree, std::span<Perm const> generators);

bool is_subgroup(PermGroup const& h, PermGroup const& g);
bool is_normal_subgroup(PermGroup const& h, PermGroup const& g);

// [H, G] generated by h^-1 g^-1 h g over all element pairs.
// Throws NotSubgroup unless H <= G.
PermGroup commutator_subgroup(PermGroup const& h, PermGroup const& g);

// gamma_0 = G, gamma_{i+1} = [gamma_i, G], stopped as soon as the chain
// repeats. Throws CapExceeded if it has not stabilized after cap_steps terms.
std::vector<PermGroup> lower_central_series(PermGroup const& g,
                                            std::size_t cap_steps = 64);

// Smallest k with gamma_k trivial; empty when the series stalls above {1}.
std::optional<std::size_t> nilpotency_class(PermGroup const& g);

PermGroup center(PermGroup const& g);

Partition orbits(PermGroup const& g);
Partition orbits(std::size_t degree, std::span<Perm const> generators);

// Every element of `a` commutes with every element of `b`. Checking the
// generators is enough.
bool groups_commute(PermGroup const& a, PermGroup const& b);

}  // namespace birack
