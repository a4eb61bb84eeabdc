#include "sublat/beta.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace sublat {

AbelianGroupSpec::AbelianGroupSpec(std::vector<PGroupType> components)
    : components_(std::move(components)) {
    std::sort(components_.begin(), components_.end(),
              [](const PGroupType& a, const PGroupType& b) { return a.prime() < b.prime(); });
    for (std::size_t i = 0; i < components_.size(); ++i) {
        if (components_[i].trivial())
            throw std::domain_error("trivial component in group spec");
        if (i && components_[i - 1].prime() == components_[i].prime())
            throw std::domain_error("duplicate prime in group spec: " +
                                    components_[i].prime().get_str());
    }
}

Int AbelianGroupSpec::order() const {
    Int out(1);
    for (const PGroupType& c : components_) out *= c.order();
    return out;
}

std::string AbelianGroupSpec::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < components_.size(); ++i) {
        if (i) out += ";";
        out += components_[i].to_string();
    }
    return out;
}

Rat beta_of_type(const PGroupType& t) { return rat_of(lattice_size(t), t.order()); }

Rat alpha_of_type(const PGroupType& t) { return rat_of(count_cyclic_subgroups(t), t.order()); }

Rat beta(const AbelianGroupSpec& g) {
    Rat out(1);
    for (const PGroupType& c : g.components()) out *= beta_of_type(c);
    return out;
}

Rat alpha(const AbelianGroupSpec& g) {
    Rat out(1);
    for (const PGroupType& c : g.components()) out *= alpha_of_type(c);
    return out;
}

namespace {

struct Candidate {
    std::string label;
    Rat value;
};

void sort_rows(std::vector<Candidate>& rows) {
    std::sort(rows.begin(), rows.end(), [](const Candidate& a, const Candidate& b) {
        if (a.value != b.value) return a.value < b.value;
        return a.label < b.label;
    });
}

std::string q_label(unsigned n) { return "Q(" + int_pow(Int(2), n).get_str() + ")"; }

std::string m_label(const Int& p, unsigned n) { return "M(" + int_pow(p, n).get_str() + ")"; }

}  // namespace

ClassificationReport second_min_check(const Int& p, unsigned n) {
    if (n < 3) throw std::domain_error("second minimum needs n >= 3");

    Int order = int_pow(p, n);
    std::vector<Candidate> non_cyclic;
    for (const Partition& d : partitions_of(n)) {
        if (d.rank() < 2) continue;
        PGroupType t(p, d);
        non_cyclic.push_back({t.to_string(), rat_of(lattice_size(t), order)});
    }
    bool has_modular = p != 2 || n >= 4;
    if (has_modular)
        non_cyclic.push_back({m_label(p, n), rat_of(lattice_size_modular(p, n), order)});
    if (p == 2)
        non_cyclic.push_back({q_label(n), rat_of(lattice_size_quaternion(n), order)});

    Rat minimum = non_cyclic.front().value;
    for (const Candidate& c : non_cyclic) minimum = std::min(minimum, c.value);

    ClassificationReport report;
    for (const Candidate& c : non_cyclic)
        if (c.value == minimum) report.extremal.push_back(c.label);
    std::sort(report.extremal.begin(), report.extremal.end());

    // the classified second-minimum set for this (p, n)
    std::vector<std::string> expected;
    std::string second = PGroupType(p, Partition{n - 1, 1}).to_string();
    if (p != 2) {
        expected = {second, m_label(p, n)};
    } else if (n == 3) {
        expected = {q_label(3)};
    } else if (n == 4) {
        expected = {second, q_label(4), m_label(p, 4)};
    } else {
        expected = {second, m_label(p, n)};
    }
    std::sort(expected.begin(), expected.end());

    // separating threshold: cyclic plus the extremal set sit at or
    // below it, everything else strictly above
    if (p == 2 && n == 3) report.threshold = rat_of(Int(3), Int(4));
    else if (p == 2 && n == 4) report.threshold = rat_of(Int(11), Int(16));
    else report.threshold = rat_of(Int(n - 1) * (p + 1) + 2, order);

    bool separation = true;
    Rat cyclic_beta = rat_of(Int(n + 1), order);
    if (cyclic_beta > report.threshold) separation = false;
    for (const Candidate& c : non_cyclic) {
        bool below = c.value <= report.threshold;
        bool listed = std::find(report.extremal.begin(), report.extremal.end(), c.label) !=
                      report.extremal.end();
        if (below != listed) separation = false;
    }

    report.pass = report.extremal == expected && minimum == report.threshold && separation;
    if (!report.pass) report.detail = "extremal set does not match the second-minimum classification";
    report.scope = p == 2 ? "abelian candidates exhaustive; non-abelian from implemented closed "
                            "forms only (Q(2^n), M(2^n))"
                          : "abelian candidates exhaustive; non-abelian from implemented closed "
                            "forms only (M(p^n))";

    std::vector<Candidate> rows = non_cyclic;
    rows.push_back({PGroupType(p, Partition{n}).to_string(), cyclic_beta});
    sort_rows(rows);
    for (Candidate& c : rows) report.table.push_back({std::move(c.label), std::move(c.value)});
    return report;
}

ClassificationReport third_min_check(const Int& p, unsigned n) {
    if (p < 3) throw std::domain_error("third minimum is stated for odd primes");
    if (n < 4) throw std::domain_error("third minimum needs n >= 4");

    Int order = int_pow(p, n);
    Partition excluded_cyclic{n};
    Partition excluded_second{n - 1, 1};
    Partition expected_min{n - 2, 2};

    std::vector<Candidate> rows;
    Rat minimum;
    bool first = true;
    for (const Partition& d : partitions_of(n)) {
        if (d == excluded_cyclic || d == excluded_second) continue;
        PGroupType t(p, d);
        Rat value = rat_of(lattice_size(t), order);
        if (first || value < minimum) minimum = value;
        first = false;
        rows.push_back({t.to_string(), std::move(value)});
    }

    ClassificationReport report;
    report.threshold = rat_of(lattice_size(PGroupType(p, expected_min)), order);
    report.pass = minimum == report.threshold;
    report.scope = "abelian candidates exhaustive";
    for (const Candidate& c : rows)
        if (c.value == minimum) report.extremal.push_back(c.label);
    std::sort(report.extremal.begin(), report.extremal.end());
    if (!report.pass)
        report.detail = "minimum not attained at " + expected_min.to_string();
    sort_rows(rows);
    for (Candidate& c : rows) report.table.push_back({std::move(c.label), std::move(c.value)});
    return report;
}

VerificationReport rank2_monotone_scan(const Int& p, unsigned n) {
    if (n < 4) throw std::domain_error("rank-2 monotonicity scan needs n >= 4");

    VerificationReport report;
    Int order = int_pow(p, n);
    Rat previous;
    bool have_previous = false;
    std::string previous_label;
    for (unsigned d1 = n / 2; d1 >= 1; --d1) {
        unsigned d2 = n - d1;
        PGroupType t(p, Partition{d2, d1});
        Int by_sum = lattice_size(t);
        Int by_formula = lattice_size_rank2(p, d1, d2);
        report.checks.push_back({"closed_form_agreement " + t.to_string(),
                                 by_sum == by_formula, false,
                                 by_sum == by_formula ? "" : by_sum.get_str() + " vs " +
                                                            by_formula.get_str()});
        Rat value = rat_of(by_sum, order);
        if (have_previous) {
            bool strict = value < previous;
            report.checks.push_back({"strict_decrease " + previous_label + " -> " + t.to_string(),
                                     strict, false,
                                     strict ? "" : "beta did not strictly decrease"});
        }
        previous = std::move(value);
        previous_label = t.to_string();
        have_previous = true;
    }
    return report;
}

bool hereditary_beta_le_one(const PGroupType& t) {
    for (unsigned m = 0; m <= t.exponent_sum(); ++m) {
        for (const Partition& l : partitions_of(m, t.type())) {
            if (beta_of_type(PGroupType(t.prime(), l)) > 1) return false;
        }
    }
    return true;
}

std::size_t beta_image_size(const PGroupType& t) {
    std::set<Rat> values;
    for (unsigned m = 0; m <= t.exponent_sum(); ++m)
        for (const Partition& l : partitions_of(m, t.type()))
            values.insert(beta_of_type(PGroupType(t.prime(), l)));
    return values.size();
}

std::vector<PGroupType> scan_beta_equal_one(const Int& p, unsigned n_max) {
    if (n_max < 1) throw std::domain_error("scan needs n_max >= 1");
    std::vector<PGroupType> out;
    for (unsigned n = 1; n <= n_max; ++n) {
        Int order = int_pow(p, n);
        for (const Partition& d : partitions_of(n)) {
            // rank above 2*sqrt(n) forces beta > 1; prune before counting
            if (d.rank() * d.rank() > 4 * static_cast<std::size_t>(n)) continue;
            PGroupType t(p, d);
            if (lattice_size(t) == order) out.push_back(std::move(t));
        }
    }
    return out;
}

}  // namespace sublat
