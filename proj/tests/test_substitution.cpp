#include <catch2/catch_amalgamated.hpp>

#include "rcf/directive.hpp"
#include "rcf/rng.hpp"
#include "rcf/substitution.hpp"

using namespace rcf;

namespace {

std::string random_word13(SplitMix64& rng, std::size_t len) {
    std::string w;
    for (std::size_t i = 0; i < len; ++i) w.push_back('1' + char(rng.below(3)));
    return w;
}

}  // namespace

TEST_CASE("letter images") {
    CHECK(sigma(1).apply("2") == "21");
    CHECK(sigma(4).apply("123") == "233112");
    CHECK(sigma(2).apply("13") == "1232");
    CHECK(sigma(3).apply("3") == "3");
}

TEST_CASE("incidence matrices equal the branch matrices") {
    for (int i = 1; i <= 4; ++i) CHECK(sigma(i).incidence() == branch_matrix(i));
}

TEST_CASE("abelianization commutes with substitution") {
    SplitMix64 rng(137);
    for (int t = 0; t < 300; ++t) {
        std::string w = random_word13(rng, 1 + rng.below(40));
        int i = 1 + int(rng.below(4));
        auto lhs = abelianization(sigma(i).apply(w));
        auto l = abelianization(w);
        const Mat3& b = branch_matrix(i);
        for (int r = 0; r < 3; ++r)
            CHECK(lhs[r] == b.a[r][0] * l[0] + b.a[r][1] * l[1] + b.a[r][2] * l[2]);
    }
}

TEST_CASE("incidence is functorial under composition") {
    SplitMix64 rng(139);
    for (int t = 0; t < 100; ++t) {
        int i = 1 + int(rng.below(4)), j = 1 + int(rng.below(4));
        Substitution c = sigma(i).compose(sigma(j));
        CHECK(c.incidence() == mat_mul(branch_matrix(i), branch_matrix(j)));
    }
}

TEST_CASE("range composition over a directive sequence") {
    auto d = DirectiveSequence::periodic("12");
    Substitution id = d.compose_range(0, 0);
    CHECK(id.images[0] == "1");
    CHECK(id.images[1] == "2");
    CHECK(id.images[2] == "3");
    // tau_{[0,2)}(1) = s1(s2(1)) = s1("12") = "121"
    Substitution c = d.compose_range(0, 2);
    CHECK(c.images[0] == "121");
    CHECK(c.incidence() == mat_mul(branch_matrix(1), branch_matrix(2)));
}

TEST_CASE("discrepancy flip of the reverse substitution") {
    SplitMix64 rng(149);
    for (int t = 0; t < 300; ++t) {
        std::string v = random_word13(rng, 1 + rng.below(50));
        auto lv = abelianization(v);
        auto ls = abelianization(sigma(4).apply(v));
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) CHECK(ls[j] - ls[k] == lv[k] - lv[j]);
    }
}

TEST_CASE("properness bookkeeping") {
    // sigma_4 alone is proper on neither side; composed behind any
    // Arnoux-Rauzy substitution it becomes right proper
    CHECK(!sigma(4).left_proper());
    CHECK(!sigma(4).right_proper());
    for (int i = 1; i <= 3; ++i) {
        Substitution s = sigma(i);
        CHECK(s.right_proper());
        Substitution pow4 = sigma(4);
        for (int k = 1; k <= 5; ++k) {
            Substitution comp = pow4.compose(sigma(i));  // sigma_4^k o sigma_i
            CHECK(comp.right_proper());
            CHECK(!pow4.left_proper());
            pow4 = sigma(4).compose(pow4);
        }
    }
}
