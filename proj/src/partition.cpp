#include "sublat/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace sublat {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    for (unsigned p : parts_)
        if (p == 0) throw std::domain_error("partition parts must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<unsigned>());
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0u);
}

Partition::Partition(std::initializer_list<unsigned> parts)
    : Partition(std::vector<unsigned>(parts)) {}

std::string Partition::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts_[i]);
    }
    return out + ")";
}

Partition conjugate(const Partition& d) {
    std::vector<unsigned> out;
    out.reserve(d.largest_part());
    for (unsigned j = 1; j <= d.largest_part(); ++j) {
        unsigned count = 0;
        for (unsigned p : d.parts())
            if (p >= j) ++count;
        out.push_back(count);
    }
    return Partition(std::move(out));
}

bool contained_in(const Partition& l, const Partition& d) {
    if (l.rank() > d.rank()) return false;
    for (std::size_t i = 0; i < l.rank(); ++i)
        if (l.part(i) > d.part(i)) return false;
    return true;
}

std::strong_ordering compare_preceq(const Partition& d, const Partition& e) {
    if (d.weight() != e.weight())
        throw std::domain_error("compare_preceq requires equal weights: " + d.to_string() +
                                " vs " + e.to_string());
    std::size_t len = std::max(d.rank(), e.rank());
    for (std::size_t i = 0; i < len; ++i) {
        if (d.part(i) != e.part(i)) return d.part(i) <=> e.part(i);
    }
    return std::strong_ordering::equal;
}

namespace {

// Parts descending, part i capped by both the previous part and bound.part(i).
void generate(unsigned remaining, std::size_t position, unsigned cap, const Partition* bound,
              std::vector<unsigned>& prefix, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    unsigned top = std::min(remaining, cap);
    if (bound) top = std::min(top, bound->part(position));
    for (unsigned part = top; part >= 1; --part) {
        prefix.push_back(part);
        generate(remaining - part, position + 1, part, bound, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(unsigned n) {
    std::vector<Partition> out;
    std::vector<unsigned> prefix;
    generate(n, 0, n, nullptr, prefix, out);
    return out;
}

std::vector<Partition> partitions_of(unsigned n, const Partition& bound) {
    std::vector<Partition> out;
    if (n > bound.weight()) return out;
    std::vector<unsigned> prefix;
    generate(n, 0, n, &bound, prefix, out);
    return out;
}

}  // namespace sublat
