#pragma once

#include <stdexcept>
#include <string>

namespace fpmm {

// Base of all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A caller violated a documented precondition. Only raised when the library
// is built with FPMM_CONTRACTS; release builds skip the (possibly costly)
// exact-arithmetic scans that detect these.
struct ContractError : Error {
  using Error::Error;
};

// No block size / variant satisfies the exactness condition for this modulus.
struct InfeasibleError : Error {
  using Error::Error;
};

// gcd(a, p) > 1, so a has no inverse mod p. For matrix products this is the
// signal to switch to the workspace variant, which never inverts.
struct NoInverseError : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

#if defined(FPMM_CONTRACTS)
#define FPMM_CONTRACT(cond, msg)                  \
  do {                                            \
    if (!(cond)) throw ::fpmm::ContractError(msg); \
  } while (0)
#else
#define FPMM_CONTRACT(cond, msg) ((void)0)
#endif

}  // namespace fpmm
