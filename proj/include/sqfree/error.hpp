#ifndef SQFREE_ERROR_HPP
#define SQFREE_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sqfree {

/// Input violates an operation's precondition (zero polynomial, non-monic
/// radical, mismatched dimensions, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed polynomial text. `position()` is the 0-based byte offset of
/// the offending character.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// An internal invariant failed, e.g. a factor-extraction loop that never
/// reaches the input degree because M_f is wrong.
class IntegrityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace sqfree

#endif  // SQFREE_ERROR_HPP
