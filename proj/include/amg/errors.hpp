#pragma once

#include <stdexcept>

namespace amg {

// A structural claim checked at construction time did not hold
// (e.g. two decomposition blocks overlap).
struct VerificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DisconnectedGraph : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input is a Lucas string but lies outside the image of the
// run-constrained-circular bijection (the two alternating words of even length).
struct ExcludedStringError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace amg
