#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sublat/rational.hpp"

namespace sublat {

/*
 * Dense polynomial in one variable q with arbitrary-precision integer
 * coefficients, index = degree. Canonical form: no trailing zero
 * coefficient; the zero polynomial has an empty coefficient list.
 * All arithmetic is exact.
 */
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Int> coeffs);

    static IntPolynomial constant(Int c);
    static IntPolynomial monomial(Int c, std::size_t degree);

    const std::vector<Int>& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    Int coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Int(0); }
    bool nonnegative_coefficients() const;

    IntPolynomial& operator+=(const IntPolynomial& other);
    IntPolynomial& operator-=(const IntPolynomial& other);
    IntPolynomial& operator*=(const IntPolynomial& other);

    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);

    bool operator==(const IntPolynomial& other) const { return coeffs_ == other.coeffs_; }

    // Exact Horner evaluation.
    Int operator()(const Int& x) const;

    std::string to_string() const;  // "q^4+q^3+2q^2+q+1", "0"

private:
    void trim();

    std::vector<Int> coeffs_;
};

// Gaussian binomial [n k]_q via the q-Pascal recurrence
//   [n k] = [n-1 k] + q^(n-k) [n-1 k-1],
// memoized, all coefficients non-negative, degree k(n-k).
// Zero polynomial when k > n.
IntPolynomial gauss_binomial(unsigned n, unsigned k);

Int eval_poly(const IntPolynomial& f, const Int& p);

}  // namespace sublat
