#pragma once

#include <stdexcept>
#include <string>

namespace loccoh {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "error"; }
};

// Malformed input: bad names, bad JSON, unknown variables, invalid patterns.
class InputError : public Error {
public:
  using Error::Error;
  const char* kind() const noexcept override { return "input"; }
};

// Two objects built over different variable contexts were combined.
class ContextMismatch : public InputError {
public:
  ContextMismatch() : InputError("ideals live in different variable contexts") {}
  const char* kind() const noexcept override { return "context_mismatch"; }
};

// The zero or unit ideal was passed to an operation that needs a proper, nonzero ideal.
class DegenerateIdeal : public InputError {
public:
  using InputError::InputError;
  const char* kind() const noexcept override { return "degenerate_ideal"; }
};

// A resource guard (variable cap, generator cap, matrix-cell budget) refused the input.
class CapExceeded : public Error {
public:
  using Error::Error;
  const char* kind() const noexcept override { return "cap_exceeded"; }
};

} // namespace loccoh
