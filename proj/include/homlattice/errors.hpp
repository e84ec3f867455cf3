#pragma once

#include <stdexcept>
#include <string>

namespace homlattice {

// Base of every error raised by the library.
class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Input could not be parsed or violates a structural constraint
// (bad partition, malformed matrix, unknown restriction string).
class invalid_input : public error {
public:
  using error::error;
};

// Text input (graph file, matrix file, manifest) is malformed.
class parse_error : public invalid_input {
public:
  using invalid_input::invalid_input;
};

// Pattern-size limit or enumeration budget exceeded.
class limit_exceeded : public error {
public:
  using error::error;
};

// A precondition stated by an operation does not hold for its arguments.
class precondition_failed : public error {
public:
  using error::error;
};

// An internal consistency check failed; indicates a bug, never bad input.
class internal_error : public error {
public:
  using error::error;
};

}  // namespace homlattice
