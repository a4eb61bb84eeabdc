#pragma once

#include <stdexcept>
#include <string>

namespace sublat {

// Thrown when an enumeration or search outgrows its configured limits
// (order caps, subgroup caps, prime sieve caps).
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sublat
