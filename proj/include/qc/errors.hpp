#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qc {

// Raised when an operation would exceed an enumeration or memory guard
// (2^k codeword enumeration, 2^(n-k) syndrome tables, long classifications).
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed code/matrix/fixture text. `line` is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Embedded table data does not reproduce what it claims to describe.
class IntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownIdError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

}  // namespace qc
