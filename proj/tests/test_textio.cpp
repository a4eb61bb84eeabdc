#include <doctest.h>

#include <random>
#include <stdexcept>

#include "sublat/textio.hpp"

using namespace sublat;

TEST_CASE("group spec parsing") {
    AbelianGroupSpec g = parse_group_spec("2:[1,3];3:[2]");
    REQUIRE(g.components().size() == 2);
    CHECK(g.components()[0].type() == Partition{3, 1});  // canonicalized to descending
    CHECK(g.components()[1].prime() == 3);
    CHECK(g.to_string() == "2:[3,1];3:[2]");

    CHECK(parse_group_spec("").trivial());
    CHECK(parse_group_spec("211:[1]").order() == 211);
    // round trip
    CHECK(parse_group_spec(g.to_string()).to_string() == g.to_string());
}

TEST_CASE("group spec rejection") {
    CHECK_THROWS(parse_group_spec("2:"));
    CHECK_THROWS(parse_group_spec("2:[]"));
    CHECK_THROWS(parse_group_spec("2:[0]"));
    CHECK_THROWS(parse_group_spec("2:[1,]"));
    CHECK_THROWS(parse_group_spec("4:[1]"));         // not a prime
    CHECK_THROWS(parse_group_spec("2:[1];2:[2]"));   // duplicate prime
    CHECK_THROWS(parse_group_spec("x"));
    CHECK_THROWS(parse_group_spec("2:[1];"));
    CHECK_THROWS(parse_group_spec("2:(1)"));
    CHECK_THROWS_AS(parse_group_spec("2:[99999999999999999999999]"), std::invalid_argument);
}

TEST_CASE("parser rejects garbage without crashing") {
    std::mt19937_64 rng(909);
    const std::string alphabet = "0123456789:;[],.x -";
    for (int i = 0; i < 2000; ++i) {
        std::string s;
        for (unsigned j = rng() % 24; j-- > 0;) s += alphabet[rng() % alphabet.size()];
        try {
            AbelianGroupSpec g = parse_group_spec(s);
            CHECK(parse_group_spec(g.to_string()).to_string() == g.to_string());
        } catch (const std::invalid_argument&) {
        } catch (const std::domain_error&) {
        }
    }
}

TEST_CASE("rational parsing") {
    CHECK(rat_from_string("11/16") == rat_of(11, 16));
    CHECK(rat_from_string("3.75") == rat_of(15, 4));
    CHECK(rat_from_string("0.001") == rat_of(1, 1000));
    CHECK(rat_from_string("42") == 42);
    CHECK(rat_from_string("-1/2") == rat_of(-1, 2));
    CHECK(rat_from_string("+2.5") == rat_of(5, 2));
    CHECK_THROWS(rat_from_string(""));
    CHECK_THROWS(rat_from_string("1/0"));
    CHECK_THROWS(rat_from_string("a.b"));
    CHECK_THROWS(rat_from_string("1.2.3"));
}

TEST_CASE("decimal rendering") {
    CHECK(decimal_string(rat_of(11, 16)) == "0.687500000000");
    CHECK(decimal_string(rat_of(2, 211)) == "0.00947867298578");
    CHECK(decimal_string(Rat(322)) == "322.000000000");
    CHECK(decimal_string(Rat(0)) == "0");
    CHECK(decimal_string(rat_of(-11, 16)) == "-0.687500000000");
    CHECK(decimal_string(rat_of(2, 3), 4) == "0.6667");
    CHECK(decimal_string(rat_of(1, 1000000)) == "1.00000000000e-6");
    CHECK(decimal_string(rat_of(Int("123456789123456789"), Int(1))) == "1.23456789123e17");
    CHECK(rat_string(rat_of(4, 8)) == "1/2");
    CHECK(rat_string(Rat(0)) == "0/1");
}
