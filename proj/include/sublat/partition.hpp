#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace sublat {

/*
 * Integer partition with parts stored weakly decreasing. The empty
 * partition (weight 0) is valid and canonical. Reading past the last
 * part yields 0, so partitions of different lengths compare naturally.
 */
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<unsigned> parts);
    Partition(std::initializer_list<unsigned> parts);

    const std::vector<unsigned>& parts() const { return parts_; }
    unsigned part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    std::size_t rank() const { return parts_.size(); }
    unsigned weight() const { return weight_; }
    bool empty() const { return parts_.empty(); }
    unsigned largest_part() const { return parts_.empty() ? 0 : parts_.front(); }

    bool operator==(const Partition& other) const { return parts_ == other.parts_; }

    // Plain lexicographic order for use as a container key. Not the
    // partial/total orders of the domain; see contained_in / compare_preceq.
    bool operator<(const Partition& other) const { return parts_ < other.parts_; }

    std::string to_string() const;  // "(4,4,1)", "()"

private:
    std::vector<unsigned> parts_;
    unsigned weight_ = 0;
};

// Transpose of the Ferrers diagram. Involution, preserves weight.
Partition conjugate(const Partition& d);

// Componentwise l_i <= d_i on the zero-padded descending sequences.
// True exactly when an abelian p-group of type d has a subgroup of type l.
bool contained_in(const Partition& l, const Partition& d);

// Total order on partitions of a fixed weight: compare part sequences
// lexicographically from the largest part down, zeros padding the tails.
// Throws std::domain_error when the weights differ.
std::strong_ordering compare_preceq(const Partition& d, const Partition& e);

// All partitions of n, in decreasing order under compare_preceq:
// (n) first, (1,...,1) last.
std::vector<Partition> partitions_of(unsigned n);

// Partitions of n contained in bound, same enumeration order.
std::vector<Partition> partitions_of(unsigned n, const Partition& bound);

}  // namespace sublat
