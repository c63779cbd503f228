#ifndef EISENKIT_ERRORS_HPP
#define EISENKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace eisenkit {

// Bad mathematical input: a precondition of an operation is violated.
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& m) : std::runtime_error(m) {}
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& m, int line, int col)
      : std::runtime_error(m + " at line " + std::to_string(line) + ", column " +
                           std::to_string(col)),
        line(line),
        col(col) {}
  int line, col;
};

// Data could not be resolved at the current truncation/precision; the caller
// should retry with more terms or bits.
struct UnresolvedError : std::runtime_error {
  explicit UnresolvedError(const std::string& m) : std::runtime_error(m) {}
};

// An internal invariant failed (including violation of a proved theorem);
// always indicates an implementation bug.
struct InternalError : std::logic_error {
  explicit InternalError(const std::string& m) : std::logic_error(m) {}
};

}  // namespace eisenkit

#endif
