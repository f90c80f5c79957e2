#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace char2lift {

// Mini-language text failed to parse; position() is the byte offset of the
// offending character in the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Residue arithmetic misuse: mixed moduli, unsupported width, or an
// operation that does not exist in Z/2^M.
class RingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation that must be exact hit a non-integral intermediate
// (e.g. Newton's identity asked to divide by k when k does not divide).
class ExactnessError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Dimension mismatch or a configured size cap exceeded.
class SizeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A constructed object failed the verification it is required to pass
// before being returned.
class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace char2lift
