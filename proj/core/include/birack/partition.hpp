#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "birack/perm.hpp"

namespace birack {

// A set partition of {0..n-1} kept in canonical form: every block is sorted
// and blocks are ordered by their least element.
class Partition {
 public:
  Partition() = default;

  // Throws InvalidInput unless the blocks are nonempty, disjoint and cover
  // {0..n-1}.
  Partition(std::size_t n, std::vector<std::vector<point>> blocks);

  // Blocks from a labelling: points with equal labels share a block.
  template <typename Label>
  static Partition from_labels(std::vector<Label> const& labels);

  static Partition discrete(std::size_t n);
  static Partition total(std::size_t n);

  std::size_t base_size() const noexcept { return _block_of.size(); }
  std::size_t size() const noexcept { return _blocks.size(); }
  std::vector<std::vector<point>> const& blocks() const noexcept {
    return _blocks;
  }
  std::size_t block_of(point x) const noexcept { return _block_of[x]; }
  bool same_block(point x, point y) const noexcept {
    return _block_of[x] == _block_of[y];
  }

  // Every block of *this lies inside a block of `coarser`.
  bool refines(Partition const& coarser) const;

  // Blocks of the form {{0,1},{2}}.
  std::string to_string() const;

  friend bool operator==(Partition const& a, Partition const& b) {
    return a._blocks == b._blocks;
  }

 private:
  void index();

  std::vector<std::vector<point>> _blocks;
  std::vector<std::size_t> _block_of;
};

// Common refinement and transitive closure of the union.
Partition meet(Partition const& a, Partition const& b);
Partition join(Partition const& a, Partition const& b);

template <typename Label>
Partition Partition::from_labels(std::vector<Label> const& labels) {
  std::size_t const n = labels.size();
  std::vector<std::vector<point>> blocks;
  std::vector<bool> placed(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (placed[i]) {
      continue;
    }
    std::vector<point> block;
    for (std::size_t j = i; j < n; ++j) {
      if (!placed[j] && labels[j] == labels[i]) {
        placed[j] = true;
        block.push_back(static_cast<point>(j));
      }
    }
    blocks.push_back(std::move(block));
  }
  return Partition(n, std::move(blocks));
}

}  // namespace birack
