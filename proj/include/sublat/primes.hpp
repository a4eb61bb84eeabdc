#pragma once

#include "sublat/rational.hpp"

namespace sublat {

// Deterministic Miller-Rabin for inputs below 2^64 (fixed witness set);
// 40-round probabilistic test above that.
bool is_prime(const Int& n);

// Smallest prime strictly greater than `after`. Throws resource_error
// when the result would exceed `cap`.
Int next_prime(const Int& after, const Int& cap);
Int next_prime(const Int& after);  // generous default cap

}  // namespace sublat
