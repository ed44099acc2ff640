#pragma once

#include "fpmm/int_utils.hpp"

namespace fpmm {

// Deterministic Miller-Rabin, valid for all n < 2^64 with this witness set.
bool is_prime_u64(u64 n);

// Largest prime strictly below `limit`; 0 if there is none.
u64 prev_prime(u64 limit);

}  // namespace fpmm
