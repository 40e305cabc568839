#include "birack/perm.hpp"

#include <numeric>
#include <sstream>

#include "birack/error.hpp"

namespace birack {

bool is_bijection(std::span<point const> images) noexcept {
  std::vector<bool> seen(images.size(), false);
  for (point i : images) {
    if (i >= images.size() || seen[i]) {
      return false;
    }
    seen[i] = true;
  }
  return true;
}

Perm::Perm(std::vector<point> images) : _images(std::move(images)) {
  if (!is_bijection(_images)) {
    throw Error(ErrorKind::InvalidInput, "image sequence is not a bijection");
  }
}

Perm::Perm(std::initializer_list<point> images)
    : Perm(std::vector<point>(images)) {}

Perm Perm::identity(std::size_t degree) {
  Perm p;
  p._images.resize(degree);
  std::iota(p._images.begin(), p._images.end(), point{0});
  return p;
}

Perm Perm::from_cycles(std::size_t degree,
                       std::vector<std::vector<point>> const& cycles,
                       bool one_indexed) {
  std::vector<point> images(degree);
  std::iota(images.begin(), images.end(), point{0});
  std::vector<bool> used(degree, false);
  point const shift = one_indexed ? 1 : 0;
  for (auto const& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      point const from = cycle[i] - shift;
      point const to = cycle[(i + 1) % cycle.size()] - shift;
      if (cycle[i] < shift || from >= degree || to >= degree || used[from]) {
        throw Error(ErrorKind::InvalidInput, "cycles are not disjoint or out of range");
      }
      used[from] = true;
      images[from] = to;
    }
  }
  return Perm(std::move(images));
}

bool Perm::is_identity() const noexcept {
  for (std::size_t i = 0; i < _images.size(); ++i) {
    if (_images[i] != i) {
      return false;
    }
  }
  return true;
}

Perm Perm::inverse() const {
  Perm inv;
  inv._images.resize(_images.size());
  for (std::size_t i = 0; i < _images.size(); ++i) {
    inv._images[_images[i]] = static_cast<point>(i);
  }
  return inv;
}

std::string Perm::to_cycle_string() const {
  std::ostringstream os;
  std::vector<bool> done(_images.size(), false);
  for (std::size_t start = 0; start < _images.size(); ++start) {
    if (done[start] || _images[start] == start) {
      continue;
    }
    os << '(';
    point i = static_cast<point>(start);
    bool first = true;
    while (!done[i]) {
      done[i] = true;
      os << (first ? "" : " ") << i;
      first = false;
      i = _images[i];
    }
    os << ')';
  }
  std::string s = os.str();
  return s.empty() ? "()" : s;
}

Perm operator*(Perm const& lhs, Perm const& rhs) {
  if (lhs.degree() != rhs.degree()) {
    throw Error(ErrorKind::DegreeMismatch, "cannot compose permutations of different degree");
  }
  Perm out;
  out._images.resize(rhs._images.size());
  for (std::size_t i = 0; i < rhs._images.size(); ++i) {
    out._images[i] = lhs._images[rhs._images[i]];
  }
  return out;
}

Perm commutator(Perm const& h, Perm const& g) {
  return h.inverse() * g.inverse() * h * g;
}

std::size_t PermHash::operator()(Perm const& p) const noexcept {
  // FNV-1a over the image sequence
  std::size_t hash = 1469598103934665603ULL;
  for (point i : p.images()) {
    hash ^= i;
    hash *= 1099511628211ULL;
  }
  return hash;
}

}  // namespace birack
