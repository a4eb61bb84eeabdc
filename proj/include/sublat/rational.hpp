#pragma once

#include <gmpxx.h>

#include <string>

namespace sublat {

using Int = mpz_class;
using Rat = mpq_class;

// p^e with a non-negative machine exponent.
Int int_pow(const Int& base, unsigned long exp);

// num/den in canonical (reduced) form.
inline Rat rat_of(Int num, Int den) {
    Rat out(std::move(num), std::move(den));
    out.canonicalize();
    return out;
}

// Parses "11/16", "42", "3.75", "-0.001" into an exact rational.
// Throws std::invalid_argument on anything outside that grammar.
Rat rat_from_string(const std::string& text);

// Canonical "num/den" rendering (den always printed, "0/1" for zero).
std::string rat_string(const Rat& value);

// Decimal approximation with the given number of significant digits,
// computed by exact long division (round half up). Falls back to
// scientific notation for extreme magnitudes.
std::string decimal_string(const Rat& value, int significant_digits = 12);

}  // namespace sublat
