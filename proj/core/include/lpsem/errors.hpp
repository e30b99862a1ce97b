#ifndef LPSEM_ERRORS_HPP
#define LPSEM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lpsem {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed program text. Carries a 1-based source position.
struct ParseError : Error {
  ParseError(std::string msg, int line, int column)
      : Error("parse error at " + std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line(line),
        column(column) {}
  int line;
  int column;
};

// Program has compound terms but no depth bound was supplied.
struct GroundingOverflow : Error {
  using Error::Error;
};

// An enumeration (stable models, oracle) would exceed its configured cap.
struct CapExceeded : Error {
  CapExceeded(std::string what, std::size_t cap)
      : Error(std::move(what) + " (cap " + std::to_string(cap) + ")"), cap(cap) {}
  std::size_t cap;
};

// Operation requires a definite program.
struct NotDefinite : Error {
  using Error::Error;
};

// Interpretation construction with overlapping true/false sets, or a
// model/levels input that is not well-formed for the requested check.
struct InvalidInterpretation : Error {
  using Error::Error;
};

// dom(l) does not match the defined atoms of the interpretation, or a
// total mapping/interpretation was required but not given.
struct DomainMismatch : Error {
  using Error::Error;
};

struct NotStable : Error {
  using Error::Error;
};

// A theorem-backed internal invariant failed; indicates a bug, not bad input.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace lpsem

#endif
