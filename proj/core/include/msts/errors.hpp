#pragma once

#include <stdexcept>

namespace msts {

// Malformed input files / invalid parameter combinations supplied by the user.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A size or resource guard refused to run (instance too large, etc.).
struct GuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A violated internal invariant; indicates a bug, never expected in normal use.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace msts
