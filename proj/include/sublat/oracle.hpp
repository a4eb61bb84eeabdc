#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "sublat/beta.hpp"
#include "sublat/errors.hpp"
#include "sublat/pgroup.hpp"
#include "sublat/report.hpp"

namespace sublat {

/*
 * Explicit direct product of cyclic groups, elements encoded as mixed-
 * radix indices 0..order-1 (index 0 = identity). Ground truth for the
 * counting formulas, at small orders only.
 */
class ExplicitGroup {
public:
    explicit ExplicitGroup(std::vector<unsigned> cyclic_orders);  // each >= 2

    const std::vector<unsigned>& cyclic_orders() const { return orders_; }
    unsigned order() const { return order_; }

    std::vector<unsigned> element(unsigned index) const;  // decode to a tuple
    unsigned add(unsigned a, unsigned b) const;
    unsigned negate(unsigned a) const;

private:
    std::vector<unsigned> orders_;
    unsigned order_ = 1;
};

// Canonically sorted element indices; equality is sequence comparison.
using SubgroupSet = std::vector<std::uint16_t>;

struct OracleLimits {
    unsigned max_order = 512;
    std::size_t max_subgroups = 2000000;
};

// All cyclic subgroups <a>, deduplicated, trivial subgroup included.
// Output sorted by size then lexicographically.
std::vector<SubgroupSet> cyclic_subgroups(const ExplicitGroup& g, const OracleLimits& limits = {});

// Join-closure fixpoint over the cyclic subgroups: every subgroup of a
// finite abelian group is a join of cyclic ones, and the join of two
// subgroups is their elementwise sum-set.
std::vector<SubgroupSet> all_subgroups(const ExplicitGroup& g, const OracleLimits& limits = {});

// Histogram of |H| over all subgroups.
std::map<unsigned, std::size_t> counts_by_order(const ExplicitGroup& g,
                                                const OracleLimits& limits = {});

// Realizations (factor orders must fit in the oracle's machine range).
ExplicitGroup realize(const PGroupType& t);
ExplicitGroup realize(const AbelianGroupSpec& g);

// Enumerates the type's group and compares the per-order counts and the
// total against s_k / lattice_size. Mismatches are reported, expected
// none. Throws resource_error past the caps (the formula-predicted
// lattice size is checked against max_subgroups before enumerating).
VerificationReport oracle_check(const PGroupType& t, const OracleLimits& limits = {});

// Test hook: identity present, closed under addition and negation.
bool is_closed_subgroup(const ExplicitGroup& g, const SubgroupSet& s);

}  // namespace sublat
