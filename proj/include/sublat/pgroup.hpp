#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sublat/partition.hpp"
#include "sublat/polynomial.hpp"
#include "sublat/rational.hpp"
#include "sublat/report.hpp"

namespace sublat {

/*
 * Canonical description of a finite abelian p-group: a prime together
 * with the partition d giving G = Z_{p^d1} x ... x Z_{p^dk}. The empty
 * partition denotes the trivial group. Primality is checked at
 * construction.
 */
class PGroupType {
public:
    PGroupType(Int p, Partition type);

    const Int& prime() const { return p_; }
    const Partition& type() const { return d_; }
    unsigned exponent_sum() const { return d_.weight(); }  // n with |G| = p^n
    std::size_t rank() const { return d_.rank(); }
    bool trivial() const { return d_.empty(); }
    bool cyclic() const { return d_.rank() <= 1; }
    Int order() const { return int_pow(p_, d_.weight()); }

    std::string to_string() const;  // "2:[3,1]"

private:
    Int p_;
    Partition d_;
};

// Number of subgroups of type l inside an abelian p-group of type d, as
// a polynomial in p (Hall's product of p-power shifts and Gaussian
// binomials over the conjugate partitions). Requires contained_in(l, d).
IntPolynomial count_subgroups_of_type(const Partition& d, const Partition& l);

// s_0..s_n as polynomials in p; depends only on the partition. Memoized.
std::vector<IntPolynomial> subgroup_count_polys(const Partition& d);

// Number of subgroups of order p^k. Requires 0 <= k <= n.
Int s_k(const PGroupType& t, unsigned k);

// |L(G)| = sum of the s_k. Trivial type -> 1.
Int lattice_size(const PGroupType& t);

// Closed form for rank 2, requires 1 <= d1 <= d2. Exact division,
// remainder checked.
Int lattice_size_rank2(const Int& p, unsigned d1, unsigned d2);

// Closed form for rank 3, requires 1 <= d1 <= d2 <= d3. Exact division,
// remainder checked.
Int lattice_size_rank3(const Int& p, unsigned d1, unsigned d2, unsigned d3);

// |L(Q_{2^n})| = 2^(n-1) + n - 1, requires n >= 3.
Int lattice_size_quaternion(unsigned n);

// |L(M(p^n))| = 2 + (n-1)(p+1), requires n >= 3 (p odd) or n >= 4 (p = 2).
Int lattice_size_modular(const Int& p, unsigned n);

// M_1..M_{n-1} with s_k = M_k p + 1. Requires a non-cyclic type.
std::vector<Int> mk_decomposition(const PGroupType& t);

// N_1..N_{n-1} with s_k = N_k p^2 + p + 1. Requires p odd, non-cyclic.
std::vector<Int> nk_decomposition(const PGroupType& t);

// |L_1(G)|: trivial subgroup plus one count per single-part subgroup type.
Int count_cyclic_subgroups(const PGroupType& t);

struct CountReport {
    PGroupType type;
    std::vector<Int> s;                 // s_0..s_n evaluated at p
    std::vector<IntPolynomial> s_poly;  // same data as polynomials in p
    Int total;                          // |L(G)|
};

CountReport count_report(const PGroupType& t);

// Executable per-type checks of the classical counting facts:
//   congruence_mod_p        s_k = 1 (mod p) for 0 < k < n
//   congruence_mod_p2       s_k = 1 + p (mod p^2), p odd, non-cyclic
//   duality                 s_k = s_{n-k}
//   unimodality             s_k - s_{k-1} has non-negative coefficients
//   frattini_maximals       s_{n-1} = (p^rank - 1)/(p - 1)
VerificationReport verify_theorems(const PGroupType& t);

}  // namespace sublat
