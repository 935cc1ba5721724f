#include <catch2/catch_amalgamated.hpp>

#include "rcf/directive.hpp"

using namespace rcf;
using Catch::Approx;

TEST_CASE("periodic and random generators are reproducible") {
    auto p = DirectiveSequence::periodic("123");
    for (int i = 0; i < 20; ++i) CHECK(p.symbol(i) == 1 + i % 3);

    auto a = DirectiveSequence::random(99), b = DirectiveSequence::random(99);
    for (int i = 0; i < 200; ++i) CHECK(a.symbol(i) == b.symbol(i));
    auto c = DirectiveSequence::random(100);
    bool differs = false;
    for (int i = 0; i < 200; ++i) differs = differs || a.symbol(i) != c.symbol(i);
    CHECK(differs);
}

TEST_CASE("block injection hits the configured occurrence density") {
    for (double rate : {0.05, 0.10, 0.20}) {
        for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
            auto d = DirectiveSequence::random_with_blocks(seed, rate);
            double observed = d.block_density(10000);
            CHECK(observed == Approx(rate).epsilon(0.10));
        }
    }
    CHECK_THROWS_AS(DirectiveSequence::random_with_blocks(1, 0.3), std::invalid_argument);
}

TEST_CASE("block sequences are reproducible from the seed") {
    auto a = DirectiveSequence::random_with_blocks(5, 0.08);
    auto b = DirectiveSequence::random_with_blocks(5, 0.08);
    for (int i = 0; i < 500; ++i) CHECK(a.symbol(i) == b.symbol(i));
}

TEST_CASE("admissible block windows are located") {
    auto p = DirectiveSequence::periodic("123");
    auto ms = p.admissible_positions(30);
    REQUIRE(!ms.empty());
    for (auto m : ms) {
        CHECK(m % 3 == 0);
        CHECK(p.incidence_range(m - 3, m + 3) ==
              mat_mul(p.incidence_range(0, 3), p.incidence_range(0, 3)));
    }
    auto d = DirectiveSequence::random_with_blocks(7, 0.12, 2);
    CHECK(!d.admissible_positions(64).empty());
}
