#pragma once

#include "sublat/beta.hpp"
#include "sublat/errors.hpp"
#include "sublat/rational.hpp"

namespace sublat {

// beta(Z_p^4) = (p^4 + 3p^3 + 4p^2 + 3p + 5) / p^4, exact.
Rat beta_z_p4(const Int& p);

struct ApproxLimits {
    unsigned max_primes = 64;         // factor count cap
    Int max_prime = Int(100000000);   // prime stream cap
};

struct ApproxResult {
    AbelianGroupSpec group;
    Rat achieved;       // exact beta of group
    Rat error;          // |achieved - target|
    unsigned primes_used = 0;
    Int largest_prime = Int(0);
};

// Raised when the limits run out before the tolerance is met; carries
// the best witness found so far.
class approx_resource_error : public resource_error {
public:
    approx_resource_error(const std::string& what, ApproxResult best)
        : resource_error(what), best_so_far(std::move(best)) {}
    ApproxResult best_so_far;
};

/*
 * Builds an explicit finite abelian group whose beta lies within eps of
 * the target x >= 0, certified by exact rational arithmetic:
 *
 *   x = 0      one cyclic factor Z_p, smallest prime with 2/p <= eps;
 *   0 < x < 1  anchor Z_{p_k}, p_k the first prime with 2/p_k <= x, then
 *              the x >= 1 construction on the scaled remainder;
 *   x >= 1     greedy product of Z_p^4 factors over the prime stream
 *              (anchor excluded): accept the first prime whose factor
 *              does not overshoot, repeat until the residual is <= eps.
 *
 * Every acceptance and the final error bound are exact comparisons.
 * Throws approx_resource_error when the limits are exhausted first.
 */
ApproxResult approximate(const Rat& x, const Rat& eps, const ApproxLimits& limits = {});

}  // namespace sublat
