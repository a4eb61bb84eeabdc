#include "sublat/polynomial.hpp"

#include <mutex>
#include <utility>
#include <vector>

namespace sublat {

IntPolynomial::IntPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial IntPolynomial::constant(Int c) {
    IntPolynomial out;
    out.coeffs_.push_back(std::move(c));
    out.trim();
    return out;
}

IntPolynomial IntPolynomial::monomial(Int c, std::size_t degree) {
    IntPolynomial out;
    if (c != 0) {
        out.coeffs_.assign(degree + 1, Int(0));
        out.coeffs_[degree] = std::move(c);
    }
    return out;
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

bool IntPolynomial::nonnegative_coefficients() const {
    for (const Int& c : coeffs_)
        if (c < 0) return false;
    return true;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Int(0));
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Int(0));
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return IntPolynomial();
    std::vector<Int> out(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& other) {
    *this = *this * other;
    return *this;
}

Int IntPolynomial::operator()(const Int& x) const {
    Int acc(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc *= x;
        acc += coeffs_[i];
    }
    return acc;
}

std::string IntPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Int& c = coeffs_[i];
        if (c == 0) continue;
        if (!out.empty()) out += c > 0 ? "+" : "-";
        else if (c < 0) out += "-";
        Int a = abs(c);
        if (a != 1 || i == 0) out += a.get_str();
        if (i > 0) {
            out += "q";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

Int eval_poly(const IntPolynomial& f, const Int& p) { return f(p); }

namespace {

// Triangle of q-binomials, rows built on demand. Guarded; callers get copies.
std::mutex gauss_mutex;
std::vector<std::vector<IntPolynomial>> gauss_rows;  // gauss_rows[n][k], k <= n

void extend_gauss_rows(unsigned n) {
    while (gauss_rows.size() <= n) {
        unsigned row = gauss_rows.size();
        std::vector<IntPolynomial> entries(row + 1);
        entries[0] = IntPolynomial::constant(Int(1));
        entries[row] = IntPolynomial::constant(Int(1));
        for (unsigned k = 1; k < row; ++k)
            entries[k] = gauss_rows[row - 1][k] +
                         IntPolynomial::monomial(Int(1), row - k) * gauss_rows[row - 1][k - 1];
        gauss_rows.push_back(std::move(entries));
    }
}

}  // namespace

IntPolynomial gauss_binomial(unsigned n, unsigned k) {
    if (k > n) return IntPolynomial();
    std::lock_guard<std::mutex> lock(gauss_mutex);
    extend_gauss_rows(n);
    return gauss_rows[n][k];
}

}  // namespace sublat
