#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "rcf/language.hpp"
#include "rcf/rng.hpp"

using namespace rcf;
using Catch::Approx;

TEST_CASE("language generation basics") {
    auto d = DirectiveSequence::periodic("1");
    LanguageSample s0 = generate_language(d, 0, 5);
    CHECK(s0.factors == std::vector<std::string>{"1", "2", "3"});

    // sigma_1 iterated on letter 2: 2 -> 21 -> 211 -> 2111
    LanguageSample s3 = generate_language(d, 3, 10);
    CHECK(s3.images[1] == "2111");
}

TEST_CASE("factor sets are factor closed") {
    auto d = DirectiveSequence::periodic("1234");
    LanguageSample s = generate_language(d, 5, 6);
    std::set<std::string> have(s.factors.begin(), s.factors.end());
    for (const auto& f : s.factors)
        for (std::size_t i = 0; i < f.size(); ++i)
            for (std::size_t len = 1; i + len <= f.size(); ++len)
                CHECK(have.count(f.substr(i, len)) == 1);
}

TEST_CASE("letter balance of simple words") {
    CHECK(letter_balance_constant("123123") == 1);
    // equal-length factors of a single-letter power are identical, so the
    // pair-based constant of one such word is zero
    CHECK(letter_balance_constant("111111") == 0);
    CHECK(letter_balance_constant("1") == 0);
}

TEST_CASE("a sample of single-letter powers maxes out at the length cap") {
    LanguageSample s;
    s.depth = 0;
    s.cap = 6;
    s.images = {"111111", "222222", "333333"};
    CHECK(letter_balance(s) == 6);
}

TEST_CASE("Arnoux-Rauzy language has a small balance constant") {
    auto d = DirectiveSequence::periodic("123");
    LanguageSample s = generate_language(d, 12, 400);
    CHECK(letter_balance(s) <= 4);
}

TEST_CASE("balance growth under the substitutions") {
    CHECK(balance_growth_check("123", 1));
    CHECK(balance_growth_check("123", 4));
    CHECK(balance_growth_check("1", 2));
    SplitMix64 rng(151);
    for (int t = 0; t < 500; ++t) {
        std::string u;
        std::size_t len = 1 + rng.below(60);
        for (std::size_t i = 0; i < len; ++i) u.push_back('1' + char(rng.below(3)));
        for (int b = 1; b <= 4; ++b) CHECK(balance_growth_check(u, b));
    }
}

TEST_CASE("factor balance table rows for single letters stay under the constant") {
    auto d = DirectiveSequence::periodic("123");
    LanguageSample s = generate_language(d, 10, 30);
    std::int64_t c = letter_balance(s);
    auto table = factor_balance_table(s, 4);
    for (const auto& row : table) {
        if (row.factor.size() == 1) CHECK(row.max_discrepancy <= c);
    }
}

TEST_CASE("theorem-3 witness report is coherent") {
    auto d = DirectiveSequence::random_with_blocks(3, 0.10);
    BalanceReport r = theorem3_witness(d, 10, 12);
    CHECK(r.letter_balance_constant >= 1);
    CHECK(r.projection_sup > 0);
    CHECK(r.factor_count > 10);
    // the 2C relation of the projection lemma, with unit slack for rounding
    CHECK(double(r.letter_balance_constant) <= 2 * r.projection_sup + 1);
    // frequency vector is normalized
    CHECK(r.frequency_vector[0] + r.frequency_vector[1] + r.frequency_vector[2] == Approx(1.0));
}
