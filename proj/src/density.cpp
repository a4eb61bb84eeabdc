#include "sublat/density.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

#include "sublat/primes.hpp"

namespace sublat {

Rat beta_z_p4(const Int& p) {
    Int p2 = p * p;
    Int p4 = p2 * p2;
    return rat_of(p4 + 3 * p2 * p + 4 * p2 + 3 * p + 5, p4);
}

namespace {

// Ceiling of a non-negative rational.
Int ceil_rat(const Rat& q) {
    Int out;
    mpz_cdiv_q(out.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return out;
}

// beta(Z_m^4) <= tau, as an integer inequality.
bool factor_fits(const Int& m, const Rat& tau) {
    const Int& tn = tau.get_num();
    const Int& td = tau.get_den();
    Int m2 = m * m;
    return (tn - td) * m2 * m2 >= td * (3 * m2 * m + 4 * m2 + 3 * m + 5);
}

// Smallest integer m >= 2 with beta(Z_m^4) <= tau. The defining quartic
// has a single sign change, so the threshold is found by doubling plus
// bisection. Requires tau > 1.
Int factor_threshold(const Rat& tau, const Int& cap) {
    Int lo(2);
    if (factor_fits(lo, tau)) return lo;
    Int hi(4);
    while (!factor_fits(hi, tau)) {
        if (hi > cap * 4)
            throw resource_error("no usable factor below prime cap " + cap.get_str());
        hi *= 2;
    }
    while (lo + 1 < hi) {  // invariant: !fits(lo), fits(hi)
        Int mid = (lo + hi) / 2;
        if (factor_fits(mid, tau)) hi = mid;
        else lo = mid;
    }
    return hi;
}

}  // namespace

ApproxResult approximate(const Rat& x, const Rat& eps, const ApproxLimits& limits) {
    if (x < 0) throw std::domain_error("approximation target must be >= 0");
    if (eps <= 0) throw std::domain_error("tolerance must be > 0");

    std::vector<PGroupType> components;
    Rat achieved(1);

    auto snapshot = [&]() {
        ApproxResult r;
        r.group = AbelianGroupSpec(components);
        r.achieved = beta(r.group);
        if (r.achieved != achieved)
            throw std::logic_error("running beta disagrees with recomputation");
        r.error = abs(r.achieved - x);
        r.primes_used = static_cast<unsigned>(components.size());
        if (!components.empty()) r.largest_prime = r.group.components().back().prime();
        return r;
    };

    if (x == 0) {
        // one cyclic factor Z_p, beta = 2/p
        Int p;
        try {
            p = next_prime(ceil_rat(Rat(2) / eps) - 1, limits.max_prime);
        } catch (const resource_error& e) {
            throw approx_resource_error(e.what(), snapshot());
        }
        components.emplace_back(p, Partition{1});
        achieved = rat_of(Int(2), p);
        return snapshot();
    }

    Int anchor(0);
    if (x < 1) {
        // first prime with 2/p <= x, used exactly once with exponent 1
        try {
            anchor = next_prime(ceil_rat(Rat(2) / x) - 1, limits.max_prime);
        } catch (const resource_error& e) {
            throw approx_resource_error(e.what(), snapshot());
        }
        components.emplace_back(anchor, Partition{1});
        achieved = rat_of(Int(2), anchor);
    }

    // Greedy pass over the Z_p^4 factor stream: the running product never
    // exceeds x, each accepted prime is the first one that fits, and
    // rejected primes can never fit again since the budget only shrinks.
    Int cursor(1);
    while (x - achieved > eps) {
        if (components.size() >= limits.max_primes)
            throw approx_resource_error("factor budget exhausted before tolerance met",
                                        snapshot());
        Rat tau = x / achieved;
        Int q;
        try {
            Int threshold = factor_threshold(tau, limits.max_prime);
            Int from = threshold - 1;
            if (cursor > from) from = cursor;
            q = next_prime(from, limits.max_prime);
            if (q == anchor) q = next_prime(q, limits.max_prime);
        } catch (const resource_error& e) {
            throw approx_resource_error(e.what(), snapshot());
        }
        Rat factor = beta_z_p4(q);
        if (achieved * factor > x)
            throw std::logic_error("greedy factor overshoots despite threshold check");
        components.emplace_back(q, Partition{1, 1, 1, 1});
        achieved *= factor;
        cursor = q;
    }
    return snapshot();
}

}  // namespace sublat
