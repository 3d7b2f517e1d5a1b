#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cqca {

/// Malformed textual input (polynomials, matrices, Pauli words).
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// An algebraic precondition on the arguments does not hold
/// (non-exact division, non-glider input, invalid stabilizer generator...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A result violated an invariant the library is supposed to maintain.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cqca
