#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vknot {

/// Malformed signed or unsigned Gauss code. `offset()` is the character offset in the input.
class GaussCodeError : public std::runtime_error {
 public:
  GaussCodeError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at offset " + std::to_string(offset) + ")"), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class UnknownChord : public std::out_of_range {
 public:
  explicit UnknownChord(int id) : std::out_of_range("unknown chord id " + std::to_string(id)) {}
};

/// An operation was called on a diagram outside its domain (e.g. a link where a knot is required).
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NotCheckerboardColorable : public PreconditionError {
 public:
  NotCheckerboardColorable() : PreconditionError("diagram is not checkerboard colorable (not mod 2 Alexander numberable)") {}
};

class UnderPassageFreeComponent : public PreconditionError {
 public:
  explicit UnderPassageFreeComponent(std::size_t circle)
      : PreconditionError("component " + std::to_string(circle) + " has no under-passage") {}
};

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace vknot
