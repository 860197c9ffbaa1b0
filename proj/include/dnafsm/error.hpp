#pragma once

#include <stdexcept>
#include <string>

namespace dnafsm {

/// Base class for every error raised by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on arguments was violated (range, length, unknown name).
class argument_error : public error {
 public:
  using error::error;
};

/// An exhaustive enumeration would exceed the configured size limit.
class budget_error : public error {
 public:
  using error::error;
};

/// The automaton cannot be realised with the given enzyme or codeword supply.
class infeasible_error : public error {
 public:
  using error::error;
};

/// A molecular operation failed (sticky-end mismatch, missing cut site, ...).
class molecule_error : public error {
 public:
  using error::error;
};

/// A file could not be read or written.
class io_error : public error {
 public:
  using error::error;
};

}  // namespace dnafsm
