#pragma once

#include <cmath>

#include "rcf/cylinder.hpp"
#include "rcf/geometry.hpp"
#include "rcf/reverse_map.hpp"

namespace rcf {

/// The 2x2 matrix field D^(n)(x) = Pi A^(n) H(x) on a cylinder, stored as
/// four affine forms e_ij(x1,x2) = c_ij + a_ij x1 + b_ij x2.  On the cylinder
/// of a fixed word the cocycle matrix is constant, so only H varies with x.
struct AffineField2x2 {
    // row-major coefficients: entry(i,j) = c[i][j] + g[i] * x_{j+1}
    double c[2][2];
    double g[2];

    Mat2 evaluate(double x1, double x2) const {
        return {c[0][0] + g[0] * x1, c[0][1] + g[0] * x2,
                c[1][0] + g[1] * x1, c[1][1] + g[1] * x2};
    }
    Mat2 evaluate(const SimplexPoint& x) const { return evaluate(x.x1, x.x2); }
};

/// Field from an explicit cocycle matrix A = A^(n):
/// D_ij = (A_{i j} - A_{0 j}) - (p_i - p_0) x_j  for i,j in {1,2}.
inline AffineField2x2 d_field_from_cocycle(const Mat3& a) {
    AffineField2x2 f;
    double p0 = static_cast<double>(a.row_sum(0));
    for (int i = 0; i < 2; ++i) {
        f.g[i] = -(static_cast<double>(a.row_sum(i + 1)) - p0);
        for (int j = 0; j < 2; ++j)
            f.c[i][j] = static_cast<double>(a.a[i + 1][j + 1] - a.a[0][j + 1]);
    }
    return f;
}

inline AffineField2x2 d_field(const Word& w) { return d_field_from_cocycle(cocycle_matrix(w)); }

/// Max over the three cylinder vertices of log ||D(x)|| in the chosen norm.
/// The norm of an affine-in-x matrix is convex on the vertex triangle, so
/// the vertex maximum is the exact maximum over the closed cylinder.
inline double max_log_d_norm(const Cylinder& c, MatrixNorm norm = MatrixNorm::kInduced) {
    AffineField2x2 f = d_field_from_cocycle(c.cocycle);
    double best = 0;
    bool first = true;
    for (const auto& v : c.vertices) {
        double n = matrix_norm_2x2(f.evaluate(v), norm);
        if (first || n > best) best = n, first = false;
    }
    return std::log(best);
}

/// 3x2 matrix G^(n)(x) = A^(n)(x) H(x), whose rows are the approximation
/// defects (p_i1 - p_i x1, p_i2 - p_i x2).  Evolves stably by left cocycle
/// multiplication; used by the exponential-convergence witness.
struct GrowthWitness {
    double g[3][2];
    double p[3];  // row sums p_i^(n), tracked in binary64

    static GrowthWitness start(const SimplexPoint& x) {
        GrowthWitness w;
        double h[3][2] = {{-x.x1, -x.x2}, {1 - x.x1, -x.x2}, {-x.x1, 1 - x.x2}};
        for (int i = 0; i < 3; ++i) {
            w.p[i] = 1;
            for (int j = 0; j < 2; ++j) w.g[i][j] = h[i][j];
        }
        return w;
    }

    /// Advance by one step of the cocycle: G <- ^tM_b G, p <- ^tM_b p.
    void advance(Branch b) {
        const Mat3& m = branch_matrix(b);
        double ng[3][2], np[3];
        for (int i = 0; i < 3; ++i) {
            ng[i][0] = ng[i][1] = 0;
            np[i] = 0;
            for (int k = 0; k < 3; ++k) {
                double t = static_cast<double>(m.a[k][i]);  // ^tM
                ng[i][0] += t * g[k][0];
                ng[i][1] += t * g[k][1];
                np[i] += t * p[k];
            }
        }
        for (int i = 0; i < 3; ++i) {
            g[i][0] = ng[i][0];
            g[i][1] = ng[i][1];
            p[i] = np[i];
        }
    }

    /// True when every row satisfies ||(p_i1,p_i2) - p_i (x1,x2)||_inf < p_i^(1-alpha).
    bool satisfies(double alpha) const {
        for (int i = 0; i < 3; ++i) {
            double lhs = std::max(std::fabs(g[i][0]), std::fabs(g[i][1]));
            if (!(lhs < std::pow(p[i], 1.0 - alpha))) return false;
        }
        return true;
    }
};

}  // namespace rcf
