#include <catch2/catch_amalgamated.hpp>

#include "rcf/exact.hpp"
#include "rcf/rng.hpp"

using namespace rcf;

TEST_CASE("branch matrices match the defining table") {
    CHECK(branch_matrix(1).a == std::array<std::array<std::int64_t, 3>, 3>{
                                    {{1, 1, 1}, {0, 1, 0}, {0, 0, 1}}});
    CHECK(branch_matrix(4).a == std::array<std::array<std::int64_t, 3>, 3>{
                                    {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}});
    CHECK_THROWS_AS(branch_matrix(0), std::domain_error);
    CHECK_THROWS_AS(branch_matrix(5), std::domain_error);
}

TEST_CASE("identity is neutral for the product") {
    Mat3 m1 = branch_matrix(1);
    CHECK(mat_mul(m1, Mat3::identity()) == m1);
    CHECK(mat_mul(Mat3::identity(), m1) == m1);
}

TEST_CASE("M4 squared by hand cofactor multiplication") {
    Mat3 sq = mat_mul(branch_matrix(4), branch_matrix(4));
    Mat3 expect;
    expect.a = {{{2, 1, 1}, {1, 2, 1}, {1, 1, 2}}};
    CHECK(sq == expect);
}

TEST_CASE("determinants of the branch matrices") {
    CHECK(mat_det(Mat3::identity()) == 1);
    CHECK(mat_det(branch_matrix(1)) == 1);
    CHECK(mat_det(branch_matrix(2)) == 1);
    CHECK(mat_det(branch_matrix(3)) == 1);
    CHECK(mat_det(branch_matrix(4)) == 2);  // the nonunimodular branch
    Mat3 p = mat_mul(mat_mul(branch_matrix(1), branch_matrix(4)), branch_matrix(2));
    CHECK(mat_det(p) == 2);
}

TEST_CASE("determinant is multiplicative on random branch products") {
    SplitMix64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        Mat3 a = Mat3::identity(), b = Mat3::identity();
        for (int i = 0; i < 6; ++i) {
            a = mat_mul(a, branch_matrix(1 + int(rng.below(4))));
            b = mat_mul(b, branch_matrix(1 + int(rng.below(4))));
        }
        CHECK(mat_det(mat_mul(a, b)) == mat_det(a) * mat_det(b));
    }
}

TEST_CASE("overflow is a hard error") {
    Mat3 big;
    for (auto& row : big.a)
        for (auto& v : row) v = std::int64_t(3) << 40;
    CHECK_THROWS_AS(mat_mul(big, big), std::overflow_error);
}

TEST_CASE("sorted matrices match the appendix table") {
    CHECK(sorted_matrix(0) == branch_matrix(1));  // (1,id) is plain branch 1
    CHECK(sorted_matrix(1).a == std::array<std::array<std::int64_t, 3>, 3>{
                                    {{1, 1, 1}, {1, 0, 0}, {0, 0, 1}}});
    CHECK(sorted_matrix(3).a == std::array<std::array<std::int64_t, 3>, 3>{
                                    {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}}});
    CHECK(mat_det(sorted_matrix(1)) == -1);
    CHECK(mat_det(sorted_matrix(3)) == -2);
}
