#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "rcf/dfield.hpp"
#include "rcf/exact.hpp"
#include "rcf/geometry.hpp"
#include "rcf/rng.hpp"

namespace rcf {

/// Symbols of the sorted variant, in the fixed order
/// (1,id), (1,(213)), (1,(231)), (4,(321)).
enum class SortedSymbol : int { k1Id = 0, k1_213 = 1, k1_231 = 2, k4_321 = 3 };

inline constexpr double kSortedBoundaryTol = 1e-14;

/// Domain of the sorted variant: 1 > x1 > x2 > 0 (first coordinate scaled to 1).
inline bool in_sorted_domain(const Vec2& x, double tol = 0.0) {
    return x[0] < 1 + tol && x[1] < x[0] + tol && x[1] > -tol;
}

/// Cell classification on the sorted domain.  The four cells are cut out of
/// the triangle by the lines 2x1+x2 = 1, x1+2x2 = 1 and x1+x2 = 1.
inline SortedSymbol sorted_classify(const Vec2& x) {
    double x1 = x[0], x2 = x[1];
    if (!(x1 > 0 && x2 > 0 && x1 < 1 && x2 < x1))
        throw std::domain_error("rcf: point outside the sorted domain");
    if (x1 + x2 > 1) return SortedSymbol::k4_321;
    double r = 1 - x1 - x2;  // leading coordinate of the unsorted image
    if (r > x1) return SortedSymbol::k1Id;
    if (r > x2) return SortedSymbol::k1_213;
    return SortedSymbol::k1_231;
}

/// One application of the sorted Reverse map: apply the unsorted branch,
/// sort descending, scale the first coordinate back to 1.
inline std::pair<Vec2, SortedSymbol> sorted_step(const Vec2& x) {
    SortedSymbol s = sorted_classify(x);
    double x1 = x[0], x2 = x[1];
    double y0, y1, y2;  // image, already sorted descending
    switch (s) {
        case SortedSymbol::k1Id: y0 = 1 - x1 - x2; y1 = x1; y2 = x2; break;
        case SortedSymbol::k1_213: y0 = x1; y1 = 1 - x1 - x2; y2 = x2; break;
        case SortedSymbol::k1_231: y0 = x1; y1 = x2; y2 = 1 - x1 - x2; break;
        default: y0 = 1 + x1 - x2; y1 = 1 - x1 + x2; y2 = -1 + x1 + x2; break;
    }
    if (y2 <= kSortedBoundaryTol * y0)
        throw std::domain_error("rcf: sorted orbit reached the domain boundary");
    return {{y1 / y0, y2 / y0}, s};
}

/// Word over the sorted alphabet.
using SortedWord = std::vector<std::uint8_t>;  // values 0..3

inline Mat3 sorted_word_product(const SortedWord& w) {
    if (w.size() > kMaxWordLength)
        throw std::length_error("rcf: sorted word longer than the overflow guard");
    Mat3 p = Mat3::identity();
    for (auto s : w) p = mat_mul(p, sorted_matrix(s));
    return p;
}

/// A sorted-variant cylinder.  Vertices are the projective images of the
/// domain corner directions (1,0,0), (1,1,0), (1,1,1) under the product,
/// scaled by the first coordinate; the area comes from the shoelace formula.
struct SortedCylinder {
    SortedWord word;
    Mat3 product;  // untransposed M_{w0} ... M_{w_{n-1}}
    std::array<Vec2, 3> vertices;
    std::int64_t det;
    double leb_area;
};

inline SortedCylinder sorted_cylinder_data(const SortedWord& w) {
    SortedCylinder c;
    c.word = w;
    c.product = sorted_word_product(w);
    c.det = mat_det(c.product);
    for (int k = 0; k < 3; ++k) {
        // image of the corner direction (1, 1...k ones, 0...) = partial column sums
        std::int64_t v0 = 0, v1 = 0, v2 = 0;
        for (int j = 0; j <= k; ++j) {
            v0 += c.product.a[0][j];
            v1 += c.product.a[1][j];
            v2 += c.product.a[2][j];
        }
        c.vertices[k] = {static_cast<double>(v1) / static_cast<double>(v0),
                         static_cast<double>(v2) / static_cast<double>(v0)};
    }
    double ax = c.vertices[1][0] - c.vertices[0][0], ay = c.vertices[1][1] - c.vertices[0][1];
    double bx = c.vertices[2][0] - c.vertices[0][0], by = c.vertices[2][1] - c.vertices[0][1];
    c.leb_area = 0.5 * std::fabs(ax * by - ay * bx);
    return c;
}

/// Affine field of the sorted cocycle block
/// D'(x) = [[0,1,0],[0,0,1]] A'^(n) [[-x1,-x2],[1,0],[0,1]] with A'^(n) = ^tP.
inline AffineField2x2 sorted_d_field(const Mat3& product) {
    AffineField2x2 f;
    for (int i = 0; i < 2; ++i) {
        f.g[i] = -static_cast<double>(product.a[0][i + 1]);  // ^tP entries
        for (int j = 0; j < 2; ++j)
            f.c[i][j] = static_cast<double>(product.a[j + 1][i + 1]);
    }
    return f;
}

inline double sorted_max_log_d_norm(const SortedCylinder& c,
                                    MatrixNorm norm = MatrixNorm::kInduced) {
    AffineField2x2 f = sorted_d_field(c.product);
    double best = 0;
    bool first = true;
    for (const auto& v : c.vertices) {
        double n = matrix_norm_2x2(f.evaluate(v[0], v[1]), norm);
        if (first || n > best) best = n, first = false;
    }
    return std::log(best);
}

/// Dual domain {y1 + y2 >= 1, |y1 - y2| <= 1, y > 0}.
inline bool in_dual_domain(const Vec2& y, double tol = 1e-12) {
    return y[0] > tol && y[1] > tol && y[0] + y[1] >= 1 - tol &&
           std::fabs(y[0] - y[1]) <= 1 + tol;
}

/// One branch of the dual map: lift to (1,y1,y2), multiply by ^tM_{symbol},
/// scale the first coordinate back to 1.  Every branch maps the dual domain
/// into itself; the caller (or a seeded driver) picks the symbol since the
/// forward partition lives on the primal side of the natural extension.
inline Vec2 dual_step(const Vec2& y, SortedSymbol sym) {
    if (!in_dual_domain(y)) throw std::domain_error("rcf: point outside the dual domain");
    if (std::fabs(y[0] + y[1] - 1) <= 1e-12)
        throw std::domain_error("rcf: dual point on the y1+y2 = 1 boundary");
    const Mat3 t = sorted_matrix(static_cast<int>(sym)).transposed();
    double w0 = double(t.a[0][0]) + double(t.a[0][1]) * y[0] + double(t.a[0][2]) * y[1];
    double w1 = double(t.a[1][0]) + double(t.a[1][1]) * y[0] + double(t.a[1][2]) * y[1];
    double w2 = double(t.a[2][0]) + double(t.a[2][1]) * y[0] + double(t.a[2][2]) * y[1];
    return {w1 / w0, w2 / w0};
}

/// Seeded dual orbit driver (uniform symbol choice per step).
inline Vec2 dual_orbit(Vec2 y, int steps, SplitMix64& rng) {
    for (int i = 0; i < steps; ++i)
        y = dual_step(y, static_cast<SortedSymbol>(rng.below(4)));
    return y;
}

}  // namespace rcf
