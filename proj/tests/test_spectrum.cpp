#include <catch2/catch_amalgamated.hpp>

#include "exact_witness.hpp"
#include "rcf/spectrum.hpp"

using namespace rcf;
using Catch::Approx;

TEST_CASE("spectrum estimates are reproducible and ordered") {
    SpectrumEstimate a = mc_spectrum(100000, 500, 8, 42);
    SpectrumEstimate b = mc_spectrum(100000, 500, 8, 42);
    CHECK(a.lambda1 == b.lambda1);
    CHECK(a.lambda2 == b.lambda2);
    CHECK(a.lambda3 == b.lambda3);
    CHECK(a.lambda1 >= a.lambda2);
    CHECK(a.lambda2 >= a.lambda3);
    SpectrumEstimate c = mc_spectrum(100000, 500, 8, 43);
    CHECK(a.lambda2 != c.lambda2);
}

TEST_CASE("one million steps land near the known spectrum") {
    SpectrumEstimate e = mc_spectrum(1000000, 1000, 8, 7);
    CHECK(e.lambda1 > 0.3);
    CHECK(e.lambda2 > -0.2);
    CHECK(e.lambda2 < -0.05);
    CHECK(e.stderr_lambda2 > 0);
    CHECK(e.stderr_lambda2 < 0.02);
}

TEST_CASE("the D cocycle exponent tracks the second exponent") {
    SpectrumEstimate e = mc_spectrum(1000000, 1000, 8, 7);
    DExponentEstimate d = mc_d_exponent(1000000, 1000, 7);
    CHECK(e.lambda2 <= d.value + 3 * e.stderr_lambda2 + 3 * d.stderr_value);
    CHECK(d.value == Approx(e.lambda2).margin(0.02));
}

TEST_CASE("approximation exponent formula") {
    SpectrumEstimate s;
    s.lambda1 = 0.2;
    s.lambda2 = -0.1;
    CHECK(approx_exponent(s) == Approx(1.5));
    s.lambda2 = 0.0;
    CHECK(approx_exponent(s) == Approx(1.0));
    s.lambda1 = 0.0;
    CHECK_THROWS_AS(approx_exponent(s), std::domain_error);

    SpectrumEstimate e = mc_spectrum(500000, 1000, 8, 11);
    CHECK(approx_exponent(e) > 1.0);
}

TEST_CASE("exponential convergence witness along exact orbits") {
    double rate = rcf_test::exact_exp_convergence_rate(1000, 50, 200, 1.05, 20250809);
    CHECK(rate >= 0.99);
}

TEST_CASE("double-precision growth witness matches the exact identity over short horizons") {
    // the floating witness is only trustworthy while the numerical orbit
    // shadows the true one; check decay on a 60-step horizon
    SplitMix64 rng(163);
    int good = 0, total = 0;
    for (int s = 0; s < 100; ++s) {
        SimplexPoint x0 = random_simplex_point(rng);
        GrowthWitness w = GrowthWitness::start(x0);
        SimplexPoint x = x0;
        bool ok = true;
        try {
            for (int n = 1; n <= 60; ++n) {
                Branch b = classify(x);
                w.advance(b);
                x = step(x).first;
                if (n >= 50) ok = ok && w.satisfies(1.05);
            }
        } catch (const OrbitTerminated&) {
            continue;
        }
        ++total;
        good += ok;
    }
    REQUIRE(total > 80);
    CHECK(double(good) / total >= 0.99);
}
