#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "rcf/exact.hpp"

namespace rcf {

using Vec3 = std::array<double, 3>;
using Vec2 = std::array<double, 2>;

inline double dot(const Vec3& x, const Vec3& y) {
    return x[0] * y[0] + x[1] * y[1] + x[2] * y[2];
}

inline double norm1(const Vec3& x) {
    return std::fabs(x[0]) + std::fabs(x[1]) + std::fabs(x[2]);
}

inline double norm_inf(const Vec3& x) {
    return std::max({std::fabs(x[0]), std::fabs(x[1]), std::fabs(x[2])});
}

/// A point of the open simplex: three positive coordinates summing to 1.
struct SimplexPoint {
    double x0, x1, x2;

    Vec3 vec() const { return {x0, x1, x2}; }
    double operator[](int i) const { return i == 0 ? x0 : (i == 1 ? x1 : x2); }
};

/// Scale a positive vector onto the simplex.
inline SimplexPoint normalize_to_simplex(const Vec3& v) {
    if (!(v[0] > 0 && v[1] > 0 && v[2] > 0))
        throw std::domain_error("rcf: normalize_to_simplex needs positive components");
    double s = v[0] + v[1] + v[2];
    return {v[0] / s, v[1] / s, v[2] / s};
}

/// Projection onto w-perp along v:  x - (<x,w>/<v,w>) v.
inline Vec3 pi_projection(const Vec3& v, const Vec3& w, const Vec3& x) {
    double vw = dot(v, w);
    if (vw == 0.0) throw std::domain_error("rcf: pi_projection with <v,w> = 0");
    double c = dot(x, w) / vw;
    return {x[0] - c * v[0], x[1] - c * v[1], x[2] - c * v[2]};
}

/// Operator infinity-norm of pi_{v,w}; the maximum over the sign cube is
/// exact because the map is linear in x.
inline double pi_projection_op_norm(const Vec3& v, const Vec3& w) {
    double best = 0;
    for (int s = 0; s < 8; ++s) {
        Vec3 x{s & 1 ? 1.0 : -1.0, s & 2 ? 1.0 : -1.0, s & 4 ? 1.0 : -1.0};
        best = std::max(best, norm_inf(pi_projection(v, w, x)));
    }
    return best;
}

namespace detail {

/// Vertices of the polygon w-perp intersected with the boundary of the unit
/// infinity-ball: proper edge crossings of the cube plus cube corners lying
/// on the plane.  At most 6 proper crossings; corners handle the degenerate
/// case of an edge contained in the plane.
inline int plane_cube_vertices(const Vec3& w, std::array<Vec3, 20>& out) {
    constexpr double kTol = 1e-12;
    double scale = norm_inf(w);
    if (!(scale > 0)) throw std::domain_error("rcf: degenerate normal vector");
    int n = 0;
    // cube corners on the plane
    for (int s = 0; s < 8; ++s) {
        Vec3 c{s & 1 ? 1.0 : -1.0, s & 2 ? 1.0 : -1.0, s & 4 ? 1.0 : -1.0};
        if (std::fabs(dot(c, w)) <= kTol * scale) out[n++] = c;
    }
    // proper crossings of the 12 edges
    for (int free = 0; free < 3; ++free) {
        int u = (free + 1) % 3, v = (free + 2) % 3;
        for (int su = -1; su <= 1; su += 2)
            for (int sv = -1; sv <= 1; sv += 2) {
                double rhs = -(su * w[u] + sv * w[v]);
                if (std::fabs(w[free]) <= kTol * scale) continue;
                double t = rhs / w[free];
                if (t >= -1.0 - kTol && t <= 1.0 + kTol) {
                    Vec3 p{};
                    p[free] = std::clamp(t, -1.0, 1.0);
                    p[u] = su;
                    p[v] = sv;
                    out[n++] = p;
                }
            }
    }
    return n;
}

}  // namespace detail

/// Infinity operator norm of m restricted to the hyperplane w-perp:
/// max of ||m x||_inf over {x in w-perp : ||x||_inf = 1}.  The feasible set
/// is a polygon whose extreme points lie on cube edges, so enumerating the
/// plane/edge intersections is exact.
inline double inf_norm_restricted(const std::array<std::array<double, 3>, 3>& m, const Vec3& w) {
    std::array<Vec3, 20> pts;
    int n = detail::plane_cube_vertices(w, pts);
    if (n == 0) throw std::domain_error("rcf: plane does not meet the unit cube boundary");
    double best = 0;
    for (int i = 0; i < n; ++i) {
        Vec3 y{};
        for (int r = 0; r < 3; ++r)
            y[r] = m[r][0] * pts[i][0] + m[r][1] * pts[i][1] + m[r][2] * pts[i][2];
        best = std::max(best, norm_inf(y));
    }
    return best;
}

inline double inf_norm_restricted(const Mat3& m, const Vec3& w) {
    std::array<std::array<double, 3>, 3> d;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) d[i][j] = static_cast<double>(m.a[i][j]);
    return inf_norm_restricted(d, w);
}

/// Classical induced infinity-norm (max absolute row sum).
inline double inf_norm(const Mat3& m) {
    double best = 0;
    for (int i = 0; i < 3; ++i)
        best = std::max(best, std::fabs(double(m.a[i][0])) + std::fabs(double(m.a[i][1])) +
                                  std::fabs(double(m.a[i][2])));
    return best;
}

struct Mat2 {
    double a11, a12, a21, a22;
};

/// Induced 1-norm of a 2x2 matrix: max absolute column sum.
inline double induced_one_norm_2x2(const Mat2& m) {
    return std::max(std::fabs(m.a11) + std::fabs(m.a21), std::fabs(m.a12) + std::fabs(m.a22));
}

/// Reading of the 1-norm on the 2x2 cocycle blocks.
///
/// kInduced is the default: the 1-norm acting on row vectors (max absolute
/// row sum), the reading that reproduces the sorted-variant bound constants.
/// kColumn is the textbook induced 1-norm, kEntrywise the sum of all |entries|.
enum class MatrixNorm { kInduced, kColumn, kEntrywise };

inline double matrix_norm_2x2(const Mat2& m, MatrixNorm which) {
    switch (which) {
        case MatrixNorm::kInduced:
            return std::max(std::fabs(m.a11) + std::fabs(m.a12), std::fabs(m.a21) + std::fabs(m.a22));
        case MatrixNorm::kColumn:
            return induced_one_norm_2x2(m);
        default:
            return std::fabs(m.a11) + std::fabs(m.a12) + std::fabs(m.a21) + std::fabs(m.a22);
    }
}

}  // namespace rcf
