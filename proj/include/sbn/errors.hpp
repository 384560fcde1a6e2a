#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sbn {

/// Malformed textual input. `line` is 1-based (0 when not line oriented);
/// `offset` is the 0-based byte offset of the offending character.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t offset)
      : std::runtime_error(what), line_(line), offset_(offset) {}
  std::size_t line() const { return line_; }
  std::size_t offset() const { return offset_; }

 private:
  std::size_t line_;
  std::size_t offset_;
};

/// An exponential computation refused because the input exceeds its size guard.
class GuardRefusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller violated the documented precondition of an operation.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A certificate or object is malformed independently of its mathematical
/// validity (out-of-range vertex, bag on a missing node, ...).
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Numeric argument outside the domain of a function.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An internal consistency check failed. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace sbn
