#pragma once

#include <stdexcept>
#include <string>

namespace ising {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Inputs outside the domain of a formula (bad sizes, zero couplings, LM above a bound).
struct DomainError : Error {
  using Error::Error;
};

// Working precision insufficient for a reliable answer.
struct PrecisionError : Error {
  using Error::Error;
};

// An identity that must hold by construction did not; signals a bug.
struct ConsistencyError : Error {
  using Error::Error;
};

}  // namespace ising
