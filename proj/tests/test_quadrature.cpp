#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "rcf/quadrature.hpp"

using namespace rcf;
using Catch::Approx;

TEST_CASE("Gauss-Legendre integrates polynomials exactly") {
    const GaussLegendre& g = GaussLegendre::of(8);
    for (int k = 0; k <= 15; ++k) {
        double s = 0;
        for (std::size_t i = 0; i < g.x.size(); ++i) s += g.w[i] * std::pow(g.x[i], k);
        CHECK(s == Approx(1.0 / (k + 1)).epsilon(1e-13));
    }
}

TEST_CASE("triangle rule on smooth integrands") {
    // area
    auto one = [](double, double) { return 1.0; };
    CHECK(gl_triangle(one, 0, 0, 1, 0, 0, 1, 16) == Approx(0.5).epsilon(1e-13));
    // x over the unit triangle = 1/6
    auto fx = [](double x, double) { return x; };
    CHECK(gl_triangle(fx, 0, 0, 1, 0, 0, 1, 16) == Approx(1.0 / 6).epsilon(1e-12));
}

TEST_CASE("Duffy handles a corner 1/r singularity") {
    // closed form: integral of 1/(x+y) over the triangle (0,0),(a,0),(0,a) is a
    double a = 0.125;
    auto f = [](double x, double y) { return 1.0 / (x + y); };
    auto q = integrate_triangle(f, 0, 0, a, 0, 0, a, 1e-12);
    CHECK(q.value == Approx(a).epsilon(1e-11));
    // and over the square [0,a]^2 it is 2 a log 2 (two Duffy patches)
    double sq = gl_triangle(f, 0, 0, a, 0, a, a, 48) + gl_triangle(f, 0, 0, a, a, 0, a, 48);
    CHECK(sq == Approx(2 * a * std::log(2.0)).epsilon(1e-11));
}

TEST_CASE("box rule") {
    auto f = [](double x, double y) { return std::exp(x) * y; };
    double expect = (std::exp(2.0) - std::exp(1.0)) * 1.5;
    CHECK(gl_box(f, 1, 2, 1, 2, 24) == Approx(expect).epsilon(1e-12));
}
