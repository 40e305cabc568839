#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace birack {

enum class ErrorKind {
  InvalidInput,
  CapExceeded,
  DegreeMismatch,
  NotSubgroup,
  NotLeftQuasigroup,
  NotRightQuasigroup,
  AxiomViolation,
  SelfCheckMismatch,
  NonCommuting,
  NotARack,
  NotACongruence,
  NotLeftDistributive,
  NotRightDistributive,
  NotDistributive,
  BraidViolation,
  Degenerate,
  SizeTooLarge,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string const& what);

  ErrorKind kind() const noexcept { return _kind; }

 private:
  ErrorKind _kind;
};

// A failed mixed birack identity. `equation` is 1, 2 or 3 as listed next to
// Violation in birack.hpp; `witness` is the smallest failing (x, y, z).
class AxiomViolation : public Error {
 public:
  AxiomViolation(int equation, std::array<std::uint32_t, 3> witness);

  int equation() const noexcept { return _equation; }
  std::array<std::uint32_t, 3> const& witness() const noexcept {
    return _witness;
  }

 private:
  int _equation;
  std::array<std::uint32_t, 3> _witness;
};

}  // namespace birack
