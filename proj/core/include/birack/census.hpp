#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "birack/birack.hpp"
#include "birack/constructors.hpp"

namespace birack {

inline constexpr std::size_t max_full_census = 3;
inline constexpr std::size_t max_distributive_census = 4;
inline constexpr std::size_t max_rack_census = 4;

struct CensusEntry {
  Birack birack;
  PropertyReport report;
  std::optional<std::size_t> mpl;
};

CensusEntry census_entry(Birack const& b);

// All permutations of {0..n-1} in lexicographic order.
std::vector<Perm> all_permutations(std::size_t n);

// Every pair (circ, bullet) with bijective circ rows and bijective bullet
// columns, circ-major in lexicographic order of the row permutations.
// Throws SizeTooLarge for n > max_full_census.
void for_each_table_pair(
    std::size_t n, std::function<void(Table const& circ, Table const& bullet)> const& visit);

// The pairs above that satisfy the birack axioms, in the same order.
void for_each_birack(std::size_t n, std::function<void(Birack const&)> const& visit);
std::vector<Birack> all_biracks(std::size_t n);

// Labelled left (right) racks on n points; n <= max_rack_census.
std::vector<Rack> left_racks(std::size_t n);
std::vector<Rack> right_racks(std::size_t n);

// Distributive biracks on n points built as (left rack, right rack) pairs
// that satisfy the three mixed identities of the alternative
// characterisation. n <= max_distributive_census.
std::vector<Birack> distributive_biracks(std::size_t n);

// Lexicographically least (circ, bullet) over all relabellings of the
// carrier. Two biracks are isomorphic iff their canonical forms are equal.
Birack canonical_form(Birack const& b);

// Keeps the first member of each isomorphism class.
std::vector<Birack> dedupe(std::vector<Birack> const& biracks);

std::vector<CensusEntry> enumerate_biracks(std::size_t n, bool deduplicate = false);
std::vector<CensusEntry> enumerate_distributive(std::size_t n, bool deduplicate = false);

}  // namespace birack
