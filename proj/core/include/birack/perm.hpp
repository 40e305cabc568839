#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace birack {

using point = std::uint32_t;

// A bijection on {0, ..., n-1}. Products compose right-to-left:
// (a * b)(i) == a(b(i)).
class Perm {
 public:
  Perm() = default;

  // Throws InvalidInput unless `images` is a bijection on {0..n-1}.
  explicit Perm(std::vector<point> images);
  Perm(std::initializer_list<point> images);

  static Perm identity(std::size_t degree);

  // Builds a permutation from disjoint cycles. With `one_indexed` the cycle
  // entries are shifted down by one, which is how fixtures written in
  // textbook notation are brought into the library.
  static Perm from_cycles(std::size_t degree,
                          std::vector<std::vector<point>> const& cycles,
                          bool one_indexed = false);

  std::size_t degree() const noexcept { return _images.size(); }
  point operator()(point i) const noexcept { return _images[i]; }
  std::span<point const> images() const noexcept { return _images; }

  bool is_identity() const noexcept;
  Perm inverse() const;

  // 0-indexed cycle notation, fixed points omitted, "()" for the identity.
  std::string to_cycle_string() const;

  friend Perm operator*(Perm const& lhs, Perm const& rhs);
  friend bool operator==(Perm const&, Perm const&) = default;
  friend std::strong_ordering operator<=>(Perm const& lhs,
                                          Perm const& rhs) = default;

 private:
  std::vector<point> _images;
};

// h^-1 g^-1 h g
Perm commutator(Perm const& h, Perm const& g);

bool is_bijection(std::span<point const> images) noexcept;

struct PermHash {
  std::size_t operator()(Perm const& p) const noexcept;
};

}  // namespace birack
