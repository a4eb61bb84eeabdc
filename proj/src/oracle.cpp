#include "sublat/oracle.hpp"

#include <algorithm>
#include <bitset>
#include <deque>
#include <stdexcept>
#include <unordered_set>

namespace sublat {

namespace {

constexpr unsigned kBitsetCapacity = 512;

using ElementBits = std::bitset<kBitsetCapacity>;

SubgroupSet members_of(const ElementBits& bits, unsigned order) {
    SubgroupSet out;
    out.reserve(bits.count());
    for (unsigned e = 0; e < order; ++e)
        if (bits.test(e)) out.push_back(static_cast<std::uint16_t>(e));
    return out;
}

bool canonical_less(const SubgroupSet& a, const SubgroupSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

}  // namespace

ExplicitGroup::ExplicitGroup(std::vector<unsigned> cyclic_orders)
    : orders_(std::move(cyclic_orders)) {
    for (unsigned m : orders_) {
        if (m < 2) throw std::domain_error("cyclic factor orders must be >= 2");
        unsigned long long next = static_cast<unsigned long long>(order_) * m;
        if (next > (1u << 20))
            throw resource_error("explicit group order too large to realize");
        order_ = static_cast<unsigned>(next);
    }
}

std::vector<unsigned> ExplicitGroup::element(unsigned index) const {
    std::vector<unsigned> out(orders_.size());
    for (std::size_t i = orders_.size(); i-- > 0;) {
        out[i] = index % orders_[i];
        index /= orders_[i];
    }
    return out;
}

unsigned ExplicitGroup::add(unsigned a, unsigned b) const {
    unsigned out = 0;
    unsigned stride = order_;
    for (unsigned m : orders_) {
        stride /= m;
        unsigned da = (a / stride) % m;
        unsigned db = (b / stride) % m;
        out += ((da + db) % m) * stride;
    }
    return out;
}

unsigned ExplicitGroup::negate(unsigned a) const {
    unsigned out = 0;
    unsigned stride = order_;
    for (unsigned m : orders_) {
        stride /= m;
        unsigned da = (a / stride) % m;
        out += ((m - da) % m) * stride;
    }
    return out;
}

namespace {

struct Enumeration {
    std::vector<SubgroupSet> cyclic;   // canonical order
    std::vector<SubgroupSet> all;      // canonical order
};

// Join-closure fixpoint. A join of subgroups of an abelian group is the
// elementwise sum-set, so closing the cyclic subgroups under joins with
// cyclic subgroups reaches every subgroup.
Enumeration enumerate_subgroups(const ExplicitGroup& g, const OracleLimits& limits,
                                bool cyclic_only) {
    unsigned order = g.order();
    if (order > limits.max_order || order > kBitsetCapacity)
        throw resource_error("group order " + std::to_string(order) + " exceeds oracle cap " +
                             std::to_string(std::min<unsigned>(limits.max_order, kBitsetCapacity)));

    std::vector<std::uint16_t> add_table(static_cast<std::size_t>(order) * order);
    for (unsigned a = 0; a < order; ++a)
        for (unsigned b = a; b < order; ++b) {
            std::uint16_t sum = static_cast<std::uint16_t>(g.add(a, b));
            add_table[static_cast<std::size_t>(a) * order + b] = sum;
            add_table[static_cast<std::size_t>(b) * order + a] = sum;
        }

    std::unordered_set<ElementBits> seen;
    struct Generator {
        SubgroupSet members;
        std::uint16_t element;  // a generator, for cheap containment tests
    };
    std::vector<Generator> generators;

    for (unsigned e = 0; e < order; ++e) {
        ElementBits bits;
        SubgroupSet orbit;
        unsigned x = 0;
        do {
            bits.set(x);
            orbit.push_back(static_cast<std::uint16_t>(x));
            x = add_table[static_cast<std::size_t>(x) * order + e];
        } while (x != 0);
        if (seen.insert(bits).second) {
            std::sort(orbit.begin(), orbit.end());
            if (e != 0) generators.push_back({orbit, static_cast<std::uint16_t>(e)});
        }
    }

    Enumeration out;
    for (const ElementBits& bits : seen) out.cyclic.push_back(members_of(bits, order));
    std::sort(out.cyclic.begin(), out.cyclic.end(), canonical_less);
    if (cyclic_only) return out;

    std::deque<SubgroupSet> worklist(out.cyclic.begin(), out.cyclic.end());
    while (!worklist.empty()) {
        SubgroupSet members = std::move(worklist.front());
        worklist.pop_front();
        for (const Generator& gen : generators) {
            if (std::binary_search(members.begin(), members.end(), gen.element)) continue;
            ElementBits joined;
            for (std::uint16_t h : members) {
                const std::uint16_t* row = &add_table[static_cast<std::size_t>(h) * order];
                for (std::uint16_t c : gen.members) joined.set(row[c]);
            }
            if (seen.insert(joined).second) {
                if (seen.size() > limits.max_subgroups)
                    throw resource_error("subgroup count exceeds cap " +
                                         std::to_string(limits.max_subgroups));
                worklist.push_back(members_of(joined, order));
            }
        }
    }

    for (const ElementBits& bits : seen) out.all.push_back(members_of(bits, order));
    std::sort(out.all.begin(), out.all.end(), canonical_less);
    return out;
}

}  // namespace

std::vector<SubgroupSet> cyclic_subgroups(const ExplicitGroup& g, const OracleLimits& limits) {
    return enumerate_subgroups(g, limits, true).cyclic;
}

std::vector<SubgroupSet> all_subgroups(const ExplicitGroup& g, const OracleLimits& limits) {
    return enumerate_subgroups(g, limits, false).all;
}

std::map<unsigned, std::size_t> counts_by_order(const ExplicitGroup& g,
                                                const OracleLimits& limits) {
    std::map<unsigned, std::size_t> out;
    for (const SubgroupSet& s : all_subgroups(g, limits)) ++out[s.size()];
    return out;
}

ExplicitGroup realize(const PGroupType& t) {
    std::vector<unsigned> orders;
    for (unsigned d : t.type().parts()) {
        Int factor = int_pow(t.prime(), d);
        if (!factor.fits_uint_p())
            throw resource_error("cyclic factor too large to realize: " + factor.get_str());
        orders.push_back(factor.get_ui());
    }
    return ExplicitGroup(std::move(orders));
}

ExplicitGroup realize(const AbelianGroupSpec& g) {
    std::vector<unsigned> orders;
    for (const PGroupType& c : g.components()) {
        ExplicitGroup component = realize(c);
        orders.insert(orders.end(), component.cyclic_orders().begin(),
                      component.cyclic_orders().end());
    }
    return ExplicitGroup(std::move(orders));
}

VerificationReport oracle_check(const PGroupType& t, const OracleLimits& limits) {
    Int order = t.order();
    if (order > limits.max_order)
        throw resource_error("group order " + order.get_str() + " exceeds oracle cap " +
                             std::to_string(limits.max_order));
    Int predicted = lattice_size(t);
    if (predicted > Int(static_cast<unsigned long>(limits.max_subgroups)))
        throw resource_error("predicted " + predicted.get_str() +
                             " subgroups exceeds cap " + std::to_string(limits.max_subgroups));

    VerificationReport report;
    auto histogram = counts_by_order(realize(t), limits);

    Int enumerated_total(0);
    for (const auto& [subgroup_order, count] : histogram) enumerated_total += Int(count);

    for (unsigned k = 0; k <= t.exponent_sum(); ++k) {
        Int expected = s_k(t, k);
        Int pk = int_pow(t.prime(), k);
        std::size_t found = 0;
        if (pk.fits_uint_p()) {
            auto it = histogram.find(pk.get_ui());
            if (it != histogram.end()) found = it->second;
        }
        bool ok = Int(static_cast<unsigned long>(found)) == expected;
        report.checks.push_back({"s_" + std::to_string(k) + " " + t.to_string(), ok, false,
                                 ok ? "" : "enumerated " + std::to_string(found) + ", formula " +
                                               expected.get_str()});
    }
    bool total_ok = enumerated_total == predicted;
    report.checks.push_back({"total " + t.to_string(), total_ok, false,
                             total_ok ? "" : "enumerated " + enumerated_total.get_str() +
                                                 ", formula " + predicted.get_str()});
    return report;
}

bool is_closed_subgroup(const ExplicitGroup& g, const SubgroupSet& s) {
    if (!std::binary_search(s.begin(), s.end(), std::uint16_t(0))) return false;
    for (std::uint16_t a : s) {
        if (!std::binary_search(s.begin(), s.end(),
                                static_cast<std::uint16_t>(g.negate(a))))
            return false;
        for (std::uint16_t b : s)
            if (!std::binary_search(s.begin(), s.end(),
                                    static_cast<std::uint16_t>(g.add(a, b))))
                return false;
    }
    return true;
}

}  // namespace sublat
