#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "rcf/exact.hpp"
#include "rcf/geometry.hpp"
#include "rcf/rng.hpp"

namespace rcf {

/// A word over the branch alphabet {1,2,3,4}.
using Word = std::vector<std::uint8_t>;

/// Exact products of up to this many branch matrices fit in 64 bits.
inline constexpr std::size_t kMaxWordLength = 39;

inline Word parse_word(const std::string& s) {
    Word w;
    w.reserve(s.size());
    for (char c : s) {
        if (c < '1' || c > '4') throw std::invalid_argument("rcf: word letters must be 1..4");
        w.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return w;
}

inline std::string word_to_string(const Word& w) {
    std::string s;
    s.reserve(w.size());
    for (auto b : w) s.push_back(static_cast<char>('0' + b));
    return s;
}

inline Word random_word(SplitMix64& rng, std::size_t len) {
    Word w(len);
    for (auto& b : w) b = static_cast<std::uint8_t>(1 + rng.below(4));
    return w;
}

/// Product M_{a0} ... M_{a_{n-1}} of branch matrices.
inline Mat3 word_product(const Word& w) {
    if (w.size() > kMaxWordLength)
        throw std::length_error("rcf: word longer than the 64-bit overflow guard");
    Mat3 p = Mat3::identity();
    for (auto b : w) p = mat_mul(p, branch_matrix(b));
    return p;
}

/// Cocycle matrix A^(n) on the cylinder of w: the transposed product.
inline Mat3 cocycle_matrix(const Word& w) { return word_product(w).transposed(); }

/// A rank-n cylinder with its exact product matrix and derived geometry.
///
/// vertices are the 1-norm-normalized rows of `cocycle` (= columns of the
/// untransposed product); leb_area is the Lebesgue area of their shadow in
/// the (x1,x2) plane, which equals |det| / (2 r0 r1 r2) for the row sums r_i.
struct Cylinder {
    Word word;
    Mat3 cocycle;  // ^t(M_{a0} ... M_{a_{n-1}})
    std::array<SimplexPoint, 3> vertices;
    std::int64_t det;
    double leb_area;
};

inline Cylinder cylinder_data(const Word& w) {
    Cylinder c;
    c.word = w;
    c.cocycle = cocycle_matrix(w);
    c.det = mat_det(c.cocycle);
    double r[3];
    for (int i = 0; i < 3; ++i) {
        std::int64_t ri = c.cocycle.row_sum(i);
        r[i] = static_cast<double>(ri);
        c.vertices[i] = {c.cocycle.a[i][0] / r[i], c.cocycle.a[i][1] / r[i],
                         c.cocycle.a[i][2] / r[i]};
    }
    c.leb_area = std::fabs(static_cast<double>(c.det)) / (2.0 * r[0] * r[1] * r[2]);
    return c;
}

/// Shoelace area of the (x1,x2) shadow of three simplex points.
inline double shoelace_area(const std::array<SimplexPoint, 3>& v) {
    double ax = v[1].x1 - v[0].x1, ay = v[1].x2 - v[0].x2;
    double bx = v[2].x1 - v[0].x1, by = v[2].x2 - v[0].x2;
    return 0.5 * std::fabs(ax * by - ay * bx);
}

/// Jacobian of the inverse branch of f^n mapping onto the cylinder of w,
/// evaluated at x:  det A^(n) / (sum_i ||A_i||_1 x_i)^3.
inline double jacobian(const Word& w, const SimplexPoint& x) {
    Mat3 a = cocycle_matrix(w);
    double denom = double(a.row_sum(0)) * x.x0 + double(a.row_sum(1)) * x.x1 +
                   double(a.row_sum(2)) * x.x2;
    return static_cast<double>(mat_det(a)) / (denom * denom * denom);
}

/// Renyi ratio C(w) = (max row 1-norm / min row 1-norm)^3 of the cocycle matrix.
inline double renyi_ratio(const Word& w) {
    if (w.empty()) throw std::invalid_argument("rcf: renyi_ratio needs a nonempty word");
    Mat3 a = cocycle_matrix(w);
    std::int64_t mx = a.row_sum(0), mn = a.row_sum(0);
    for (int i = 1; i < 3; ++i) {
        mx = std::max(mx, a.row_sum(i));
        mn = std::min(mn, a.row_sum(i));
    }
    double q = static_cast<double>(mx) / static_cast<double>(mn);
    return q * q * q;
}

/// The two smaller row 1-norms of the cocycle matrix sum to more than the
/// largest one; true for every branch product.
inline bool row_norm_check(const Word& w) {
    if (w.empty()) throw std::invalid_argument("rcf: row_norm_check needs a nonempty word");
    Mat3 a = cocycle_matrix(w);
    std::array<std::int64_t, 3> r{a.row_sum(0), a.row_sum(1), a.row_sum(2)};
    std::sort(r.begin(), r.end());
    return r[0] + r[1] > r[2];
}

/// Count of branch-4 letters; det of the cocycle matrix equals 2^count.
inline int count_fours(const Word& w) {
    int c = 0;
    for (auto b : w) c += (b == 4);
    return c;
}

}  // namespace rcf
