#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace rcf {

/// Gauss-Legendre nodes and weights on [0,1].
struct GaussLegendre {
    std::vector<double> x, w;

    explicit GaussLegendre(int n) : x(n), w(n) {
        for (int i = 0; i < n; ++i) {
            double t = std::cos(M_PI * (i + 0.75) / (n + 0.5));
            double p1 = 0, dp = 0;
            for (int it = 0; it < 100; ++it) {
                double a = 1, b = t;
                for (int k = 2; k <= n; ++k) {
                    double c = ((2 * k - 1) * t * b - (k - 1) * a) / k;
                    a = b;
                    b = c;
                }
                p1 = b;
                dp = n * (t * b - a) / (t * t - 1);
                double dt = p1 / dp;
                t -= dt;
                if (std::fabs(dt) < 1e-15) break;
            }
            x[i] = 0.5 * (1 + t);
            w[i] = 1.0 / ((1 - t * t) * dp * dp);
        }
    }

    static const GaussLegendre& of(int n) {
        static const GaussLegendre g8(8), g12(12), g16(16), g24(24), g32(32), g48(48), g64(64);
        switch (n) {
            case 8: return g8;
            case 12: return g12;
            case 16: return g16;
            case 24: return g24;
            case 32: return g32;
            case 48: return g48;
            default: return n <= 56 ? g48 : g64;
        }
    }
};

/// Tensor Gauss-Legendre integral over the triangle (v0,v1,v2) through the
/// Duffy substitution x = v0 + s((1-u)(v1-v0) + u(v2-v0)).  The Jacobian
/// factor s tames an integrable 1/r singularity at v0, so placing the
/// singular corner at v0 makes the transformed integrand smooth.
template <class F>
double gl_triangle(const F& f, double v0x, double v0y, double v1x, double v1y, double v2x,
                   double v2y, int n) {
    const GaussLegendre& g = GaussLegendre::of(n);
    double e1x = v1x - v0x, e1y = v1y - v0y;
    double e2x = v2x - v0x, e2y = v2y - v0y;
    double jac = std::fabs(e1x * e2y - e1y * e2x);
    if (jac == 0) return 0.0;
    double s = 0;
    for (std::size_t i = 0; i < g.x.size(); ++i) {
        double acc = 0;
        for (std::size_t j = 0; j < g.x.size(); ++j) {
            double u = g.x[j];
            double dx = (1 - u) * e1x + u * e2x;
            double dy = (1 - u) * e1y + u * e2y;
            acc += g.w[j] * f(v0x + g.x[i] * dx, v0y + g.x[i] * dy);
        }
        s += g.w[i] * g.x[i] * acc;
    }
    return s * jac;
}

struct QuadResult {
    double value;
    double error_estimate;
};

/// Order escalation until two consecutive estimates agree to tol.
template <class F>
QuadResult integrate_triangle(const F& f, double v0x, double v0y, double v1x, double v1y,
                              double v2x, double v2y, double tol = 1e-10) {
    static const int orders[] = {12, 16, 24, 32, 48, 64};
    double prev = gl_triangle(f, v0x, v0y, v1x, v1y, v2x, v2y, 8);
    for (int n : orders) {
        double cur = gl_triangle(f, v0x, v0y, v1x, v1y, v2x, v2y, n);
        double err = std::fabs(cur - prev);
        if (err <= tol * std::max(1.0, std::fabs(cur))) return {cur, err};
        prev = cur;
    }
    return {prev, std::fabs(prev) * 1e-8};
}

/// Tensor Gauss-Legendre over an axis-aligned rectangle.
template <class F>
double gl_box(const F& f, double x0, double x1, double y0, double y1, int n) {
    const GaussLegendre& g = GaussLegendre::of(n);
    double s = 0;
    for (std::size_t i = 0; i < g.x.size(); ++i)
        for (std::size_t j = 0; j < g.x.size(); ++j)
            s += g.w[i] * g.w[j] * f(x0 + (x1 - x0) * g.x[i], y0 + (y1 - y0) * g.x[j]);
    return s * (x1 - x0) * (y1 - y0);
}

}  // namespace rcf
