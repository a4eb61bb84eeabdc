#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "sublat/partition.hpp"

using namespace sublat;

TEST_CASE("construction canonicalizes and validates") {
    CHECK(Partition({1, 3}).parts() == std::vector<unsigned>{3, 1});
    CHECK(Partition({2, 2}).weight() == 4);
    CHECK(Partition().empty());
    CHECK(Partition().weight() == 0);
    CHECK(Partition({4, 4, 1}).part(7) == 0);
    CHECK_THROWS_AS(Partition({2, 0}), std::domain_error);
}

TEST_CASE("conjugate examples") {
    CHECK(conjugate(Partition{3, 1}) == Partition{2, 1, 1});
    CHECK(conjugate(Partition{2, 2}) == Partition{2, 2});
    CHECK(conjugate(Partition()) == Partition());
}

TEST_CASE("conjugate is a weight-preserving involution") {
    for (unsigned n = 0; n <= 30; ++n) {
        for (const Partition& d : partitions_of(n)) {
            Partition c = conjugate(d);
            CHECK(c.weight() == d.weight());
            CHECK(conjugate(c) == d);
        }
    }
}

TEST_CASE("containment") {
    CHECK(contained_in(Partition{1, 1}, Partition{2, 1}));
    CHECK_FALSE(contained_in(Partition{2}, Partition{1, 1, 1}));
    CHECK(contained_in(Partition(), Partition{5, 3}));
    CHECK(contained_in(Partition(), Partition()));
}

TEST_CASE("preceq examples from rank-3 order 512") {
    CHECK(compare_preceq(Partition{4, 4, 1}, Partition{5, 2, 2}) == std::strong_ordering::less);
    CHECK(compare_preceq(Partition{5, 2, 2}, Partition{5, 3, 1}) == std::strong_ordering::less);
    CHECK(compare_preceq(Partition{3, 1}, Partition{3, 1}) == std::strong_ordering::equal);
    CHECK_THROWS_AS(compare_preceq(Partition{2}, Partition{1, 1, 1}), std::domain_error);
}

TEST_CASE("preceq is a total order on partitions of fixed weight") {
    for (unsigned n = 1; n <= 10; ++n) {
        auto all = partitions_of(n);
        for (std::size_t i = 0; i < all.size(); ++i) {
            for (std::size_t j = 0; j < all.size(); ++j) {
                auto ord = compare_preceq(all[i], all[j]);
                if (i == j) CHECK(ord == std::strong_ordering::equal);
                else CHECK(ord != std::strong_ordering::equal);
                CHECK((compare_preceq(all[j], all[i]) ==
                       (ord == std::strong_ordering::less ? std::strong_ordering::greater
                        : ord == std::strong_ordering::greater ? std::strong_ordering::less
                                                               : std::strong_ordering::equal)));
            }
        }
    }
}

TEST_CASE("preceq transitivity on all triples of partitions of 8") {
    auto all = partitions_of(8);
    for (const Partition& a : all)
        for (const Partition& b : all)
            for (const Partition& c : all) {
                if (compare_preceq(a, b) == std::strong_ordering::less &&
                    compare_preceq(b, c) == std::strong_ordering::less)
                    CHECK(compare_preceq(a, c) == std::strong_ordering::less);
            }
}

TEST_CASE("partitions_of enumerates in decreasing preceq order") {
    auto four = partitions_of(4);
    REQUIRE(four.size() == 5);
    CHECK(four[0] == Partition{4});
    CHECK(four[1] == Partition{3, 1});
    CHECK(four[2] == Partition{2, 2});
    CHECK(four[3] == Partition{2, 1, 1});
    CHECK(four[4] == Partition{1, 1, 1, 1});

    for (unsigned n = 1; n <= 12; ++n) {
        auto all = partitions_of(n);
        for (std::size_t i = 1; i < all.size(); ++i)
            CHECK(compare_preceq(all[i - 1], all[i]) == std::strong_ordering::greater);
    }
}

TEST_CASE("bounded enumeration") {
    auto capped = partitions_of(2, Partition{1, 1, 1});
    REQUIRE(capped.size() == 1);
    CHECK(capped[0] == Partition{1, 1});

    auto zero = partitions_of(0, Partition{3, 2});
    REQUIRE(zero.size() == 1);
    CHECK(zero[0] == Partition());

    // bounded output = exactly the contained partitions
    Partition bound{3, 2, 1};
    for (unsigned m = 0; m <= bound.weight(); ++m) {
        auto bounded = partitions_of(m, bound);
        for (const Partition& l : bounded) CHECK(contained_in(l, bound));
        std::size_t expected = 0;
        for (const Partition& l : partitions_of(m))
            if (contained_in(l, bound)) ++expected;
        CHECK(bounded.size() == expected);
    }
}
