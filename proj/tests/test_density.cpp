#include <doctest.h>

#include <random>
#include <stdexcept>

#include "sublat/density.hpp"
#include "sublat/primes.hpp"

using namespace sublat;

TEST_CASE("prime stream") {
    CHECK(next_prime(Int(1)) == 2);
    CHECK(next_prime(Int(13)) == 17);
    CHECK(next_prime(Int(199)) == 211);
    CHECK(next_prime(Int(2)) == 3);
    CHECK_THROWS_AS(next_prime(Int(200), Int(210)), resource_error);

    CHECK(is_prime(Int(2)));
    CHECK_FALSE(is_prime(Int(1)));
    CHECK_FALSE(is_prime(Int("3215031751")));  // strong pseudoprime to bases 2,3,5,7
    CHECK(is_prime(Int("18446744073709551629")));
}

TEST_CASE("beta of Z_p^4") {
    CHECK(beta_z_p4(Int(2)) == rat_of(67, 16));
    CHECK(beta_z_p4(Int(3)) == rat_of(212, 81));
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul})
        CHECK(beta_z_p4(Int(p)) == beta_of_type(PGroupType(Int(p), Partition{1, 1, 1, 1})));
}

TEST_CASE("log-term bracket 1/p < ln beta(Z_p^4) < 4/p via rational bounds") {
    Int p(1);
    while ((p = next_prime(p)) <= 1000) {
        Rat b = beta_z_p4(p);
        // lower: beta >= p/(p-1) > e^(1/p)
        CHECK(b * (p - 1) >= p);
        // upper: beta <= 1 + x + x^2/2 + x^3/6 < e^x at x = 4/p
        Rat x = rat_of(Int(4), p);
        CHECK(b <= 1 + x + x * x / 2 + x * x * x / 6);
    }
}

TEST_CASE("approximation fixtures") {
    ApproxResult exact = approximate(Rat(1), rat_of(1, 1000));
    CHECK(exact.group.trivial());
    CHECK(exact.error == 0);
    CHECK(exact.primes_used == 0);

    ApproxResult zero = approximate(Rat(0), rat_of(1, 100));
    CHECK(zero.group.to_string() == "211:[1]");
    CHECK(zero.achieved == rat_of(2, 211));

    ApproxResult half = approximate(rat_of(1, 2), rat_of(1, 10));
    CHECK(half.error <= rat_of(1, 10));
    CHECK(half.achieved >= rat_of(2, 5));
    CHECK(half.achieved <= rat_of(3, 5));
    CHECK(half.achieved == beta(half.group));
}

TEST_CASE("anchor prime is used once with exponent one and never reused") {
    for (auto [num, den] : {std::pair<int, int>{1, 2}, {7, 10}, {3, 17}, {99, 100}}) {
        ApproxResult r = approximate(rat_of(num, den), rat_of(1, 1000));
        const auto& comps = r.group.components();
        REQUIRE(!comps.empty());
        unsigned anchors = 0;
        for (const PGroupType& c : comps) {
            if (c.type() == Partition{1}) ++anchors;
            else CHECK(c.type() == Partition{1, 1, 1, 1});
        }
        CHECK(anchors == 1);
    }
}

TEST_CASE("approximation is deterministic") {
    ApproxResult a = approximate(rat_of(27, 8), rat_of(1, 500));
    ApproxResult b = approximate(rat_of(27, 8), rat_of(1, 500));
    CHECK(a.group.to_string() == b.group.to_string());
    CHECK(a.achieved == b.achieved);
    CHECK(a.error == b.error);
}

TEST_CASE("soundness on random targets") {
    std::mt19937_64 rng(42);
    Rat eps = rat_of(1, 1000);
    for (int i = 0; i < 40; ++i) {
        Rat x = rat_of(Int(static_cast<unsigned long>(rng() % 10001)), Int(1000));
        ApproxResult r = approximate(x, eps);
        CHECK(r.error <= eps);
        CHECK(r.error == abs(r.achieved - x));
        CHECK(r.achieved == beta(r.group));
        if (!r.group.components().empty())
            CHECK(r.largest_prime == r.group.components().back().prime());
    }
}

TEST_CASE("domain and resource errors") {
    CHECK_THROWS_AS(approximate(rat_of(-1, 2), rat_of(1, 10)), std::domain_error);
    CHECK_THROWS_AS(approximate(rat_of(1, 2), Rat(0)), std::domain_error);

    ApproxLimits tight;
    tight.max_primes = 2;
    try {
        approximate(Rat(9), rat_of(1, 1000000), tight);
        FAIL("expected a resource error");
    } catch (const approx_resource_error& e) {
        CHECK(e.best_so_far.group.components().size() <= 2);
        CHECK(e.best_so_far.achieved == beta(e.best_so_far.group));
        CHECK(e.best_so_far.error > rat_of(1, 1000000));
    }

    ApproxLimits small_cap;
    small_cap.max_prime = Int(100);
    CHECK_THROWS_AS(approximate(Rat(0), rat_of(1, 100), small_cap), approx_resource_error);
}
