#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace rcf {

/// Exact 3x3 integer matrix with overflow-checked arithmetic.
///
/// Products of branch matrices stay nonnegative and their entries are
/// bounded by 3^n after n factors, so 64-bit arithmetic is exact for
/// n <= 39.  Any overflow is a hard error, never a silent wraparound.
struct Mat3 {
    std::array<std::array<std::int64_t, 3>, 3> a{};

    static Mat3 identity() {
        Mat3 m;
        m.a[0][0] = m.a[1][1] = m.a[2][2] = 1;
        return m;
    }

    std::int64_t operator()(int i, int j) const { return a[i][j]; }
    std::int64_t& operator()(int i, int j) { return a[i][j]; }

    bool operator==(const Mat3& o) const { return a == o.a; }

    Mat3 transposed() const {
        Mat3 t;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) t.a[i][j] = a[j][i];
        return t;
    }

    bool positive() const {
        for (auto& r : a)
            for (auto v : r)
                if (v <= 0) return false;
        return true;
    }

    std::int64_t row_sum(int i) const { return a[i][0] + a[i][1] + a[i][2]; }
    std::int64_t col_sum(int j) const { return a[0][j] + a[1][j] + a[2][j]; }
};

inline std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_mul_overflow(x, y, &r))
        throw std::overflow_error("rcf: 64-bit overflow in matrix product");
    return r;
}

inline std::int64_t checked_add(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_add_overflow(x, y, &r))
        throw std::overflow_error("rcf: 64-bit overflow in matrix sum");
    return r;
}

/// Exact product, overflow checked.
inline Mat3 mat_mul(const Mat3& x, const Mat3& y) {
    Mat3 z;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            std::int64_t s = 0;
            for (int k = 0; k < 3; ++k)
                s = checked_add(s, checked_mul(x.a[i][k], y.a[k][j]));
            z.a[i][j] = s;
        }
    return z;
}

/// Exact signed determinant, overflow checked.
inline std::int64_t mat_det(const Mat3& m) {
    auto minor2 = [](std::int64_t p, std::int64_t q, std::int64_t r, std::int64_t s) {
        std::int64_t d;
        if (__builtin_sub_overflow(checked_mul(p, s), checked_mul(q, r), &d))
            throw std::overflow_error("rcf: 64-bit overflow in determinant");
        return d;
    };
    std::int64_t t = checked_mul(m.a[0][0], minor2(m.a[1][1], m.a[1][2], m.a[2][1], m.a[2][2]));
    std::int64_t u = checked_mul(m.a[0][1], minor2(m.a[1][0], m.a[1][2], m.a[2][0], m.a[2][2]));
    std::int64_t v = checked_mul(m.a[0][2], minor2(m.a[1][0], m.a[1][1], m.a[2][0], m.a[2][1]));
    std::int64_t r;
    if (__builtin_sub_overflow(t, u, &r) || __builtin_add_overflow(r, v, &r))
        throw std::overflow_error("rcf: 64-bit overflow in determinant");
    return r;
}

/// The four branch matrices M1..M4 of the Reverse map (index 1-based).
inline const Mat3& branch_matrix(int i) {
    static const std::array<Mat3, 4> tbl = [] {
        std::array<Mat3, 4> t{};
        t[0].a = {{{1, 1, 1}, {0, 1, 0}, {0, 0, 1}}};
        t[1].a = {{{1, 0, 0}, {1, 1, 1}, {0, 0, 1}}};
        t[2].a = {{{1, 0, 0}, {0, 1, 0}, {1, 1, 1}}};
        t[3].a = {{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}};
        return t;
    }();
    if (i < 1 || i > 4) throw std::domain_error("rcf: branch index out of range");
    return tbl[i - 1];
}

/// Matrices of the sorted variant, alphabet {(1,id),(1,(213)),(1,(231)),(4,(321))},
/// index 0..3 in that order.
inline const Mat3& sorted_matrix(int s) {
    static const std::array<Mat3, 4> tbl = [] {
        std::array<Mat3, 4> t{};
        t[0].a = {{{1, 1, 1}, {0, 1, 0}, {0, 0, 1}}};
        t[1].a = {{{1, 1, 1}, {1, 0, 0}, {0, 0, 1}}};
        t[2].a = {{{1, 1, 1}, {1, 0, 0}, {0, 1, 0}}};
        t[3].a = {{{1, 1, 0}, {1, 0, 1}, {0, 1, 1}}};
        return t;
    }();
    if (s < 0 || s > 3) throw std::domain_error("rcf: sorted symbol out of range");
    return tbl[s];
}

inline std::string sorted_symbol_name(int s) {
    static const char* names[4] = {"(1,id)", "(1,(213))", "(1,(231))", "(4,(321))"};
    if (s < 0 || s > 3) throw std::domain_error("rcf: sorted symbol out of range");
    return names[s];
}

}  // namespace rcf
