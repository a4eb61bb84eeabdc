#include "sublat/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace sublat {

Int int_pow(const Int& base, unsigned long exp) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rat rat_from_string(const std::string& text) {
    std::string s = text;
    bool negative = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        negative = s[0] == '-';
        s.erase(0, 1);
    }
    if (s.empty()) throw std::invalid_argument("empty number: '" + text + "'");

    Rat value;
    if (auto slash = s.find('/'); slash != std::string::npos) {
        std::string num = s.substr(0, slash);
        std::string den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw std::invalid_argument("bad rational: '" + text + "'");
        Int n(num), d(den);
        if (d == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
        value = Rat(n, d);
    } else if (auto dot = s.find('.'); dot != std::string::npos) {
        std::string whole = s.substr(0, dot);
        std::string frac = s.substr(dot + 1);
        if (whole.empty()) whole = "0";
        if (frac.empty() || !all_digits(whole) || !all_digits(frac))
            throw std::invalid_argument("bad decimal: '" + text + "'");
        Int scale = int_pow(Int(10), frac.size());
        value = Rat(Int(whole) * scale + Int(frac), scale);
    } else {
        if (!all_digits(s)) throw std::invalid_argument("bad integer: '" + text + "'");
        value = Rat(Int(s));
    }
    value.canonicalize();
    if (negative) value = -value;
    return value;
}

std::string rat_string(const Rat& value) {
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string decimal_string(const Rat& value, int significant_digits) {
    if (significant_digits < 1) significant_digits = 1;
    if (value == 0) return "0";

    Int a = abs(value.get_num());
    Int b = value.get_den();

    // exponent e with 10^e <= a/b < 10^(e+1)
    long e = static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 10)) -
             static_cast<long>(mpz_sizeinbase(b.get_mpz_t(), 10));
    while (a >= b * int_pow(Int(10), static_cast<unsigned long>(e < 0 ? 0 : e) + 1)) ++e;
    while (e > 0 && a < b * int_pow(Int(10), static_cast<unsigned long>(e))) --e;
    if (e <= 0) {
        while (a * int_pow(Int(10), static_cast<unsigned long>(-e)) < b) --e;
    }

    // round half up to significant_digits digits
    long shift = significant_digits - 1 - e;
    Int scaled = shift >= 0 ? a * int_pow(Int(10), static_cast<unsigned long>(shift)) : a;
    Int divisor = shift >= 0 ? b : b * int_pow(Int(10), static_cast<unsigned long>(-shift));
    Int digits = scaled / divisor;
    if ((scaled % divisor) * 2 >= divisor) ++digits;

    std::string ds = digits.get_str();
    if (static_cast<int>(ds.size()) > significant_digits) {  // rounding overflow, e.g. 999.. -> 1000..
        ds.pop_back();
        ++e;
    }

    std::string sign = value < 0 ? "-" : "";
    if (e >= significant_digits || e < -4) {  // scientific
        std::string mant = ds.substr(0, 1);
        if (ds.size() > 1) mant += "." + ds.substr(1);
        return sign + mant + "e" + std::to_string(e);
    }
    if (e >= 0) {
        std::string out = ds.substr(0, static_cast<std::size_t>(e) + 1);
        std::string frac = ds.substr(static_cast<std::size_t>(e) + 1);
        if (!frac.empty()) out += "." + frac;
        return sign + out;
    }
    return sign + "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + ds;
}

}  // namespace sublat
