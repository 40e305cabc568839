#include "birack/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "birack/error.hpp"

namespace birack {

Partition::Partition(std::size_t n, std::vector<std::vector<point>> blocks)
    : _blocks(std::move(blocks)) {
  std::vector<bool> seen(n, false);
  std::size_t covered = 0;
  for (auto& block : _blocks) {
    if (block.empty()) {
      throw Error(ErrorKind::InvalidInput, "partition has an empty block");
    }
    for (point x : block) {
      if (x >= n || seen[x]) {
        throw Error(ErrorKind::InvalidInput, "partition blocks overlap or leave the base set");
      }
      seen[x] = true;
      ++covered;
    }
    std::sort(block.begin(), block.end());
  }
  if (covered != n) {
    throw Error(ErrorKind::InvalidInput, "partition does not cover the base set");
  }
  std::sort(_blocks.begin(), _blocks.end(),
            [](auto const& a, auto const& b) { return a.front() < b.front(); });
  _block_of.assign(n, 0);
  index();
}

void Partition::index() {
  for (std::size_t i = 0; i < _blocks.size(); ++i) {
    for (point x : _blocks[i]) {
      _block_of[x] = i;
    }
  }
}

Partition Partition::discrete(std::size_t n) {
  std::vector<std::vector<point>> blocks(n);
  for (std::size_t i = 0; i < n; ++i) {
    blocks[i] = {static_cast<point>(i)};
  }
  return Partition(n, std::move(blocks));
}

Partition Partition::total(std::size_t n) {
  std::vector<point> all(n);
  std::iota(all.begin(), all.end(), point{0});
  return Partition(n, {std::move(all)});
}

bool Partition::refines(Partition const& coarser) const {
  if (coarser.base_size() != base_size()) {
    return false;
  }
  for (auto const& block : _blocks) {
    for (point x : block) {
      if (!coarser.same_block(block.front(), x)) {
        return false;
      }
    }
  }
  return true;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < _blocks.size(); ++i) {
    os << (i ? "," : "") << '{';
    for (std::size_t j = 0; j < _blocks[i].size(); ++j) {
      os << (j ? "," : "") << _blocks[i][j];
    }
    os << '}';
  }
  os << '}';
  return os.str();
}

Partition meet(Partition const& a, Partition const& b) {
  if (a.base_size() != b.base_size()) {
    throw Error(ErrorKind::DegreeMismatch, "partitions of different base sets");
  }
  std::vector<std::pair<std::size_t, std::size_t>> labels(a.base_size());
  for (point x = 0; x < a.base_size(); ++x) {
    labels[x] = {a.block_of(x), b.block_of(x)};
  }
  return Partition::from_labels(labels);
}

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

Partition join(Partition const& a, Partition const& b) {
  if (a.base_size() != b.base_size()) {
    throw Error(ErrorKind::DegreeMismatch, "partitions of different base sets");
  }
  std::vector<std::size_t> parent(a.base_size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  for (Partition const* p : {&a, &b}) {
    for (auto const& block : p->blocks()) {
      for (point x : block) {
        std::size_t const r1 = find_root(parent, block.front());
        std::size_t const r2 = find_root(parent, x);
        parent[std::max(r1, r2)] = std::min(r1, r2);
      }
    }
  }
  std::vector<std::size_t> labels(a.base_size());
  for (std::size_t x = 0; x < labels.size(); ++x) {
    labels[x] = find_root(parent, x);
  }
  return Partition::from_labels(labels);
}

}  // namespace birack
