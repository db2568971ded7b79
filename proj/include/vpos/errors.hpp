#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vpos {

/// Two classes, bundles or rings that were expected to share a lattice do not.
class LatticeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computed object violates an invariant it is required to satisfy. For
/// Zariski decompositions this means the curve catalog is incomplete.
class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed user text: class expressions, bundle descriptions and surface files.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t position, const std::string& expected)
      : std::invalid_argument(message + " at position " + std::to_string(position) +
                              "; expected " + expected),
        position_(position),
        expected_(expected) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

}  // namespace vpos
