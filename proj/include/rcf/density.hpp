#pragma once

#include <cmath>
#include <stdexcept>

#include "rcf/geometry.hpp"
#include "rcf/quadrature.hpp"
#include "rcf/reverse_map.hpp"

namespace rcf {

/// Invariant density of the Reverse map: h = 4 / (pi^2 (1-x0)(1-x1)(1-x2)).
inline double density(const SimplexPoint& x) {
    double d = (1 - x.x0) * (1 - x.x1) * (1 - x.x2);
    if (!(d > 0)) throw std::domain_error("rcf: density singular at a simplex corner");
    return 4.0 / (M_PI * M_PI * d);
}

/// Same density in the (x1,x2) chart, where 1 - x0 = x1 + x2.
inline double density_chart(double x1, double x2) {
    return 4.0 / (M_PI * M_PI * (x1 + x2) * (1 - x1) * (1 - x2));
}

/// Invariant density of the sorted variant in its (x1,x2) chart.
inline double sorted_density_chart(double x1, double x2) {
    return 24.0 / (M_PI * M_PI * (1 + x1) * (1 + x2) * (x1 + x2));
}

/// Total mass of the invariant measure.  The density has three integrable
/// corner singularities; a barycentric split gives each corner its own
/// Duffy patch.
inline QuadResult measure_mass(double tol = 1e-10) {
    const double cx = 1.0 / 3, cy = 1.0 / 3;
    const double p[3][2] = {{0, 0}, {1, 0}, {0, 1}};
    const double mid[3][2] = {{0.5, 0}, {0.5, 0.5}, {0, 0.5}};
    double total = 0, err = 0;
    for (int c = 0; c < 3; ++c) {
        int prev = (c + 2) % 3;
        auto r1 = integrate_triangle(density_chart, p[c][0], p[c][1], mid[c][0], mid[c][1], cx, cy, tol);
        auto r2 = integrate_triangle(density_chart, p[c][0], p[c][1], cx, cy, mid[prev][0],
                                     mid[prev][1], tol);
        total += r1.value + r2.value;
        err += r1.error_estimate + r2.error_estimate;
    }
    return {total, err};
}

/// Total mass of the sorted invariant measure over 1 > x1 > x2 > 0
/// (single singular corner at the origin).
inline QuadResult sorted_measure_mass(double tol = 1e-10) {
    return integrate_triangle(sorted_density_chart, 0, 0, 1, 0, 1, 1, tol);
}

/// Inverse branch of the Reverse map: y -> M_i y / ||M_i y||_1.
inline SimplexPoint inverse_branch(Branch i, const SimplexPoint& y) {
    const Mat3& m = branch_matrix(i);
    Vec3 v{};
    for (int r = 0; r < 3; ++r)
        v[r] = double(m.a[r][0]) * y.x0 + double(m.a[r][1]) * y.x1 + double(m.a[r][2]) * y.x2;
    return normalize_to_simplex(v);
}

/// Jacobian of inverse_branch(i, .) at y.
inline double inverse_branch_jacobian(Branch i, const SimplexPoint& y) {
    const Mat3& a = branch_matrix(i).transposed();
    double denom = double(a.row_sum(0)) * y.x0 + double(a.row_sum(1)) * y.x1 +
                   double(a.row_sum(2)) * y.x2;
    return static_cast<double>(mat_det(a)) / (denom * denom * denom);
}

/// Transfer-operator defect at a point: sum_i h(phi_i y) |Jac phi_i(y)| - h(y).
/// Vanishes identically for the invariant density.
inline double transfer_defect(const SimplexPoint& y) {
    double s = 0;
    for (Branch i = 1; i <= 4; ++i) s += density(inverse_branch(i, y)) * inverse_branch_jacobian(i, y);
    return s - density(y);
}

/// Quadrature check of measure invariance on a rectangle E (interior to the
/// simplex in the (x1,x2) chart): mu(f^{-1} E) - mu(E), computed through the
/// inverse branches.
inline double invariance_defect_on_box(double x1lo, double x1hi, double x2lo, double x2hi,
                                       int order = 32) {
    if (x1hi + x2hi >= 1)
        throw std::domain_error("rcf: invariance box must be interior to the simplex");
    auto pulled = [](double x1, double x2) {
        SimplexPoint y{1 - x1 - x2, x1, x2};
        double s = 0;
        for (Branch i = 1; i <= 4; ++i)
            s += density(inverse_branch(i, y)) * inverse_branch_jacobian(i, y);
        return s;
    };
    double lhs = gl_box(pulled, x1lo, x1hi, x2lo, x2hi, order);
    double rhs = gl_box(density_chart, x1lo, x1hi, x2lo, x2hi, order);
    return lhs - rhs;
}

}  // namespace rcf
