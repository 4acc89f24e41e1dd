#pragma once

#include <stdexcept>

namespace irrlat {

// An argument violates a structural invariant of its type (bad shape,
// out-of-range value, dependent generators, ...).
class invariant_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The input is structurally fine but violates a hypothesis of the
// statement being instantiated, so the statement does not apply.
class hypothesis_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed serialized input.
class parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace irrlat
