#include "sublat/pgroup.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "sublat/primes.hpp"

namespace sublat {

PGroupType::PGroupType(Int p, Partition type) : p_(std::move(p)), d_(std::move(type)) {
    if (!is_prime(p_))
        throw std::domain_error("not a prime: " + p_.get_str());
}

std::string PGroupType::to_string() const {
    std::string out = p_.get_str() + ":[";
    for (std::size_t i = 0; i < d_.rank(); ++i) {
        if (i) out += ",";
        out += std::to_string(d_.parts()[i]);
    }
    return out + "]";
}

namespace {

std::mutex cache_mutex;
std::map<std::pair<Partition, Partition>, IntPolynomial> count_cache;
std::map<Partition, std::vector<IntPolynomial>> s_poly_cache;

// Hall's product over the conjugate partitions, descending indexing,
// zero-padded tails:
//   prod_i  p^(l'[i+1] * (d'[i] - l'[i])) * [ d'[i]-l'[i+1]  over  l'[i]-l'[i+1] ]_p
IntPolynomial count_by_formula(const Partition& d, const Partition& l) {
    Partition dc = conjugate(d);
    Partition lc = conjugate(l);
    IntPolynomial out = IntPolynomial::constant(Int(1));
    for (std::size_t i = 0; i < dc.rank(); ++i) {
        unsigned shift = lc.part(i + 1) * (dc.part(i) - lc.part(i));
        out *= IntPolynomial::monomial(Int(1), shift);
        out *= gauss_binomial(dc.part(i) - lc.part(i + 1), lc.part(i) - lc.part(i + 1));
    }
    return out;
}

}  // namespace

IntPolynomial count_subgroups_of_type(const Partition& d, const Partition& l) {
    if (!contained_in(l, d))
        throw std::domain_error("subgroup type " + l.to_string() + " not contained in " +
                                d.to_string());
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto key = std::make_pair(d, l);
    auto it = count_cache.find(key);
    if (it != count_cache.end()) return it->second;
    IntPolynomial value = count_by_formula(d, l);
    count_cache.emplace(std::move(key), value);
    return value;
}

std::vector<IntPolynomial> subgroup_count_polys(const Partition& d) {
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = s_poly_cache.find(d);
        if (it != s_poly_cache.end()) return it->second;
    }
    std::vector<IntPolynomial> polys(d.weight() + 1);
    for (unsigned k = 0; k <= d.weight(); ++k) {
        IntPolynomial sum;
        for (const Partition& l : partitions_of(k, d)) sum += count_subgroups_of_type(d, l);
        polys[k] = std::move(sum);
    }
    std::lock_guard<std::mutex> lock(cache_mutex);
    s_poly_cache.emplace(d, polys);
    return polys;
}

Int s_k(const PGroupType& t, unsigned k) {
    if (k > t.exponent_sum())
        throw std::domain_error("subgroup order exponent out of range: k=" + std::to_string(k) +
                                " for " + t.to_string());
    return subgroup_count_polys(t.type())[k](t.prime());
}

Int lattice_size(const PGroupType& t) {
    Int total(0);
    for (const IntPolynomial& poly : subgroup_count_polys(t.type())) total += poly(t.prime());
    return total;
}

Int lattice_size_rank2(const Int& p, unsigned d1, unsigned d2) {
    if (d1 < 1 || d1 > d2)
        throw std::domain_error("rank-2 exponents must satisfy 1 <= d1 <= d2");
    Int a = Int(d2 - d1 + 1) * int_pow(p, d1 + 2);
    a -= (Int(d2) - d1 - 1) * int_pow(p, d1 + 1);
    a -= Int(d1 + d2 + 3) * p;
    a += Int(d1 + d2 + 1);
    Int den = (p - 1) * (p - 1);
    Int quotient, remainder;
    mpz_tdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), a.get_mpz_t(), den.get_mpz_t());
    if (remainder != 0)
        throw std::logic_error("rank-2 closed form: non-exact division");
    return quotient;
}

Int lattice_size_rank3(const Int& p, unsigned d1, unsigned d2, unsigned d3) {
    if (d1 < 1 || d1 > d2 || d2 > d3)
        throw std::domain_error("rank-3 exponents must satisfy 1 <= d1 <= d2 <= d3");
    Int a = Int(d1 + 1) * Int(d3 - d2 + 1) * int_pow(p, d1 + d2 + 5);
    a += Int(2) * Int(d1 + 1) * int_pow(p, d1 + d2 + 4);
    a -= Int(2) * Int(d1 + 1) * Int(d3 - d2) * int_pow(p, d1 + d2 + 3);
    a -= Int(2) * Int(d1 + 1) * int_pow(p, d1 + d2 + 2);
    a += Int(d1 + 1) * (Int(d3) - d2 - 1) * int_pow(p, d1 + d2 + 1);
    a -= Int(d3 + d2 - d1 + 3) * int_pow(p, 2 * d1 + 4);
    a -= Int(2) * int_pow(p, 2 * d1 + 3);
    a += (Int(d3) + d2 - d1 - 1) * int_pow(p, 2 * d1 + 2);
    a += Int(d1 + d2 + d3 + 5) * p * p;
    a += Int(2) * p;
    a -= Int(d1 + d2 + d3 + 1);
    Int den = (p * p - 1) * (p * p - 1) * (p - 1);
    Int quotient, remainder;
    mpz_tdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), a.get_mpz_t(), den.get_mpz_t());
    if (remainder != 0)
        throw std::logic_error("rank-3 closed form: non-exact division");
    return quotient;
}

Int lattice_size_quaternion(unsigned n) {
    if (n < 3) throw std::domain_error("generalized quaternion group needs n >= 3");
    return int_pow(Int(2), n - 1) + n - 1;
}

Int lattice_size_modular(const Int& p, unsigned n) {
    if (!is_prime(p)) throw std::domain_error("not a prime: " + p.get_str());
    if (p == 2 ? n < 4 : n < 3)
        throw std::domain_error("modular group M(p^n) needs n >= 3 (odd p) or n >= 4 (p = 2)");
    return Int(2) + Int(n - 1) * (p + 1);
}

std::vector<Int> mk_decomposition(const PGroupType& t) {
    if (t.rank() < 2)
        throw std::domain_error("M_k decomposition needs a non-cyclic type");
    unsigned n = t.exponent_sum();
    std::vector<Int> out;
    out.reserve(n - 1);
    for (unsigned k = 1; k < n; ++k) {
        Int sk = s_k(t, k);
        if ((sk - 1) % t.prime() != 0)
            throw std::logic_error("s_k - 1 not divisible by p at k=" + std::to_string(k));
        Int mk = (sk - 1) / t.prime();
        if (mk < 1)
            throw std::logic_error("M_k < 1 for a non-cyclic type at k=" + std::to_string(k));
        out.push_back(std::move(mk));
    }
    return out;
}

std::vector<Int> nk_decomposition(const PGroupType& t) {
    if (t.prime() == 2)
        throw std::domain_error("N_k decomposition needs an odd prime");
    if (t.rank() < 2)
        throw std::domain_error("N_k decomposition needs a non-cyclic type");
    unsigned n = t.exponent_sum();
    Int p2 = t.prime() * t.prime();
    std::vector<Int> out;
    out.reserve(n - 1);
    for (unsigned k = 1; k < n; ++k) {
        Int sk = s_k(t, k);
        if ((sk - 1 - t.prime()) % p2 != 0)
            throw std::logic_error("s_k - 1 - p not divisible by p^2 at k=" + std::to_string(k));
        Int nk = (sk - 1 - t.prime()) / p2;
        if (nk < 0)
            throw std::logic_error("N_k < 0 at k=" + std::to_string(k));
        out.push_back(std::move(nk));
    }
    return out;
}

Int count_cyclic_subgroups(const PGroupType& t) {
    Int total(1);  // trivial subgroup
    for (unsigned k = 1; k <= t.type().largest_part(); ++k)
        total += count_subgroups_of_type(t.type(), Partition{k})(t.prime());
    return total;
}

CountReport count_report(const PGroupType& t) {
    CountReport report{t, {}, subgroup_count_polys(t.type()), Int(0)};
    report.s.reserve(report.s_poly.size());
    for (const IntPolynomial& poly : report.s_poly) {
        report.s.push_back(poly(t.prime()));
        report.total += report.s.back();
    }
    return report;
}

VerificationReport verify_theorems(const PGroupType& t) {
    VerificationReport report;
    unsigned n = t.exponent_sum();
    const Int& p = t.prime();
    auto polys = subgroup_count_polys(t.type());
    std::vector<Int> s(polys.size());
    for (unsigned k = 0; k <= n; ++k) s[k] = polys[k](p);

    CheckResult mod_p{"congruence_mod_p", true, false, ""};
    for (unsigned k = 1; k < n; ++k) {
        if (s[k] % p != 1) {
            mod_p.pass = false;
            mod_p.detail = "fails at k=" + std::to_string(k);
            break;
        }
    }
    report.checks.push_back(mod_p);

    CheckResult mod_p2{"congruence_mod_p2", true, false, ""};
    if (p == 2) {
        mod_p2.skipped = true;
        mod_p2.detail = "skipped (p = 2)";
    } else if (t.rank() <= 1) {
        mod_p2.skipped = true;
        mod_p2.detail = "skipped (cyclic)";
    } else {
        Int p2 = p * p;
        for (unsigned k = 1; k < n; ++k) {
            if (s[k] % p2 != (1 + p) % p2) {
                mod_p2.pass = false;
                mod_p2.detail = "fails at k=" + std::to_string(k);
                break;
            }
        }
    }
    report.checks.push_back(mod_p2);

    CheckResult duality{"duality", true, false, ""};
    for (unsigned k = 0; k <= n / 2; ++k) {
        if (!(polys[k] == polys[n - k])) {
            duality.pass = false;
            duality.detail = "s_" + std::to_string(k) + " != s_" + std::to_string(n - k);
            break;
        }
    }
    report.checks.push_back(duality);

    CheckResult unimodal{"unimodality", true, false, ""};
    for (unsigned k = 1; k <= n / 2; ++k) {
        if (!(polys[k] - polys[k - 1]).nonnegative_coefficients()) {
            unimodal.pass = false;
            unimodal.detail = "negative coefficient in s_" + std::to_string(k) + " - s_" +
                              std::to_string(k - 1);
            break;
        }
    }
    report.checks.push_back(unimodal);

    CheckResult frattini{"frattini_maximals", true, false, ""};
    if (n >= 1) {
        Int expected = (int_pow(p, t.rank()) - 1) / (p - 1);
        if (s[n - 1] != expected) {
            frattini.pass = false;
            frattini.detail = "s_{n-1} = " + s[n - 1].get_str() + ", expected " + expected.get_str();
        }
    }
    report.checks.push_back(frattini);

    return report;
}

}  // namespace sublat
