#include "birack/error.hpp"

#include <sstream>

namespace birack {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::NotSubgroup: return "NotSubgroup";
    case ErrorKind::NotLeftQuasigroup: return "NotLeftQuasigroup";
    case ErrorKind::NotRightQuasigroup: return "NotRightQuasigroup";
    case ErrorKind::AxiomViolation: return "AxiomViolation";
    case ErrorKind::SelfCheckMismatch: return "SelfCheckMismatch";
    case ErrorKind::NonCommuting: return "NonCommuting";
    case ErrorKind::NotARack: return "NotARack";
    case ErrorKind::NotACongruence: return "NotACongruence";
    case ErrorKind::NotLeftDistributive: return "NotLeftDistributive";
    case ErrorKind::NotRightDistributive: return "NotRightDistributive";
    case ErrorKind::NotDistributive: return "NotDistributive";
    case ErrorKind::BraidViolation: return "BraidViolation";
    case ErrorKind::Degenerate: return "Degenerate";
    case ErrorKind::SizeTooLarge: return "SizeTooLarge";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, std::string const& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what),
      _kind(kind) {}

namespace {

std::string describe(int equation, std::array<std::uint32_t, 3> const& w) {
  std::ostringstream os;
  static constexpr char const* identities[] = {
      "x o (y o z) = (x o y) o ((x * y) o z)",
      "(x o y) * ((x * y) o z) = (x * (y o z)) o (y * z)",
      "(x * y) * z = (x * (y o z)) * (y * z)"};
  os << "identity " << equation;
  if (equation >= 1 && equation <= 3) {
    os << " [" << identities[equation - 1] << "]";
  }
  os << " fails at (x, y, z) = (" << w[0] << ", " << w[1] << ", " << w[2] << ")";
  return os.str();
}

}  // namespace

AxiomViolation::AxiomViolation(int equation,
                               std::array<std::uint32_t, 3> witness)
    : Error(ErrorKind::AxiomViolation, describe(equation, witness)),
      _equation(equation),
      _witness(witness) {}

}  // namespace birack
