#include "sublat/primes.hpp"

#include "sublat/errors.hpp"

namespace sublat {

namespace {

// Miller-Rabin, single witness, n odd > 2.
bool mr_witness(const Int& n, const Int& a) {
    Int d = n - 1;
    unsigned long r = mpz_scan1(d.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), r);
    Int x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) return true;
    for (unsigned long i = 1; i < r; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return true;
    }
    return false;
}

const unsigned long kWitnesses64[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

}  // namespace

bool is_prime(const Int& n) {
    if (n < 2) return false;
    for (unsigned long q : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) {
        // deterministic for all inputs below 2^64 with this witness set
        for (unsigned long a : kWitnesses64) {
            if (n % a == 0) return n == a;
            if (!mr_witness(n, Int(a))) return false;
        }
        return true;
    }
    return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

Int next_prime(const Int& after, const Int& cap) {
    Int candidate = after < 2 ? Int(2) : after + 1;
    if (candidate > 2 && candidate % 2 == 0) ++candidate;
    while (!is_prime(candidate)) {
        candidate += candidate == 2 ? 1 : 2;
        if (candidate > cap)
            throw resource_error("prime stream exhausted: no prime in (" + after.get_str() +
                                 ", " + cap.get_str() + "]");
    }
    if (candidate > cap)
        throw resource_error("prime stream exhausted: next prime after " + after.get_str() +
                             " exceeds cap " + cap.get_str());
    return candidate;
}

Int next_prime(const Int& after) { return next_prime(after, after + 10000000); }

}  // namespace sublat
