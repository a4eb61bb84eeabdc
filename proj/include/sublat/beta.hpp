#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sublat/pgroup.hpp"
#include "sublat/rational.hpp"
#include "sublat/report.hpp"

namespace sublat {

/*
 * A finite abelian group as its primary decomposition: one PGroupType
 * per prime, primes strictly increasing. Empty = trivial group.
 */
class AbelianGroupSpec {
public:
    AbelianGroupSpec() = default;
    explicit AbelianGroupSpec(std::vector<PGroupType> components);

    const std::vector<PGroupType>& components() const { return components_; }
    bool trivial() const { return components_.empty(); }
    Int order() const;

    std::string to_string() const;  // "2:[3,1];3:[2]", "" for trivial

private:
    std::vector<PGroupType> components_;
};

// beta(G) = |L(G)|/|G|, multiplicative over the coprime components.
Rat beta(const AbelianGroupSpec& g);

// alpha(G) = |L_1(G)|/|G|, same multiplicativity.
Rat alpha(const AbelianGroupSpec& g);

Rat beta_of_type(const PGroupType& t);
Rat alpha_of_type(const PGroupType& t);

struct ClassificationRow {
    std::string label;  // "2:[3,1]", "Q(16)", "M(16)"
    Rat value;          // exact beta
};

struct ClassificationReport {
    bool pass = false;
    Rat threshold;                      // separating value, exact
    std::vector<std::string> extremal;  // labels attaining the minimum
    std::vector<ClassificationRow> table;
    std::string detail;
    std::string scope;  // candidate coverage: abelian exhaustive, non-abelian by closed forms
};

// Second-minimum of beta at order p^n (n >= 3) over the non-cyclic
// candidates: all abelian types plus the Q_{2^n} / M(p^n) closed forms
// where defined. Verifies the extremal set and the threshold that
// separates exactly {cyclic} + extremal set from the rest.
ClassificationReport second_min_check(const Int& p, unsigned n);

// Third-minimum for odd p, n >= 4: over abelian types excluding (n) and
// (n-1,1), the minimum is at (n-2,2). Table carries all candidates
// sorted by beta.
ClassificationReport third_min_check(const Int& p, unsigned n);

// Walks rank-2 types of order p^n in increasing partition order,
// asserting beta strictly decreases at each step; every value is
// computed by both the general summation and the rank-2 closed form.
// Requires n >= 4.
VerificationReport rank2_monotone_scan(const Int& p, unsigned n);

// True iff beta(H) <= 1 for every subgroup H, decided exhaustively over
// the subgroup types (partitions contained in d), the trivial subgroup
// included with beta = 1.
bool hereditary_beta_le_one(const PGroupType& t);

// Cardinality of { beta(H) : H in L(G) } as a set of exact rationals.
std::size_t beta_image_size(const PGroupType& t);

// All types with exponent sum <= n_max and beta exactly 1. Types of
// rank k with k^2 > 4n are pruned before any counting.
std::vector<PGroupType> scan_beta_equal_one(const Int& p, unsigned n_max);

}  // namespace sublat
