#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "rcf/directive.hpp"
#include "rcf/geometry.hpp"
#include "rcf/rng.hpp"
#include "rcf/substitution.hpp"

namespace rcf {

struct EigenvectorEstimate {
    Vec3 direction;        // 1-norm-normalized image of the barycenter
    double cone_diameter;  // max pairwise angle of the normalized columns, radians
};

/// Direction of the nested cones B_{[0,depth)} R^3_{>=0}: the normalized
/// image of the barycenter, plus a cone-diameter estimate so callers can
/// detect non-convergence instead of trusting a number.
inline EigenvectorEstimate right_eigenvector(const DirectiveSequence& d, int depth) {
    Mat3 p = d.incidence_range(0, depth);
    if (!p.positive())
        throw std::domain_error("rcf: depth window has a non-positive incidence product");
    Vec3 cols[3];
    for (int j = 0; j < 3; ++j) {
        double n2 = 0;
        for (int i = 0; i < 3; ++i) {
            cols[j][i] = static_cast<double>(p.a[i][j]);
            n2 += cols[j][i] * cols[j][i];
        }
        double n = std::sqrt(n2);
        for (int i = 0; i < 3; ++i) cols[j][i] /= n;
    }
    double diam = 0;
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b) {
            double c = std::clamp(dot(cols[a], cols[b]), -1.0, 1.0);
            diam = std::max(diam, std::acos(c));
        }
    Vec3 v{};
    for (int i = 0; i < 3; ++i)
        v[i] = static_cast<double>(p.a[i][0] + p.a[i][1] + p.a[i][2]);
    double s = v[0] + v[1] + v[2];
    return {{v[0] / s, v[1] / s, v[2] / s}, diam};
}

struct ConstellationResult {
    double max_norm;        // over all 72 constellations
    double max_norm_w_one;  // sub-case with the plain 1-vector
    Vec3 arg_u, arg_w;
    Vec3 arg_x;
};

/// Exact maximum of ||pi_{u,w}(x)||_inf over the extremal rays of the
/// positive-block cones and the sign cube: u in the columns of B1 B2 B3,
/// w in the columns of its transpose, x in {-1,1}^3.
inline ConstellationResult constellation_bound() {
    static const Vec3 us[3] = {{4, 2, 1}, {3, 2, 1}, {2, 1, 1}};
    static const Vec3 ws[3] = {{4, 3, 2}, {2, 2, 1}, {1, 1, 1}};
    ConstellationResult r{0, 0, {}, {}, {}};
    for (const auto& u : us)
        for (const auto& w : ws)
            for (int s = 0; s < 8; ++s) {
                Vec3 x{s & 1 ? 1.0 : -1.0, s & 2 ? 1.0 : -1.0, s & 4 ? 1.0 : -1.0};
                double v = norm_inf(pi_projection(u, w, x));
                if (v > r.max_norm) {
                    r.max_norm = v;
                    r.arg_u = u;
                    r.arg_w = w;
                    r.arg_x = x;
                }
                if (w[0] == 1 && w[1] == 1 && w[2] == 1) r.max_norm_w_one = std::max(r.max_norm_w_one, v);
            }
    return r;
}

/// Contraction of B = B1 B2 B3 on the hyperplanes ^t(B^2) z-perp for z over
/// the standard rays and `samples` random positive directions; returns the
/// observed maximum of the restricted infinity norm.
inline double contraction_check(int samples, std::uint64_t seed = 20250809) {
    if (samples < 1) throw std::invalid_argument("rcf: contraction_check needs samples >= 1");
    Mat3 b = mat_mul(mat_mul(branch_matrix(1), branch_matrix(2)), branch_matrix(3));
    Mat3 b2t = mat_mul(b, b).transposed();
    auto restricted = [&](const Vec3& z) {
        Vec3 w{};
        for (int i = 0; i < 3; ++i)
            w[i] = double(b2t.a[i][0]) * z[0] + double(b2t.a[i][1]) * z[1] + double(b2t.a[i][2]) * z[2];
        return inf_norm_restricted(b, w);
    };
    double best = 0;
    for (int i = 0; i < 3; ++i) {
        Vec3 e{};
        e[i] = 1;
        best = std::max(best, restricted(e));
    }
    best = std::max(best, restricted({1, 1, 1}));
    SplitMix64 rng(seed);
    for (int i = 0; i < samples; ++i) {
        Vec3 z{rng.uniform(), rng.uniform(), rng.uniform()};
        if (z[0] + z[1] + z[2] < 1e-9) continue;
        best = std::max(best, restricted(z));
    }
    return best;
}

/// Restricted operator norms ||B_{[m,n)}|_{1_n-perp}||_inf over sampled
/// admissible windows of a directive sequence (m right after an occurrence
/// of (sigma_1 sigma_2 sigma_3)^2, or m = 0); returns the observed maximum.
inline double restricted_norm_survey(const DirectiveSequence& d, int windows,
                                     std::int64_t search_limit = 64,
                                     std::uint64_t seed = 20250809) {
    auto ms = d.admissible_positions(std::min<std::int64_t>(search_limit, 36));
    std::vector<std::int64_t> starts{0};
    starts.insert(starts.end(), ms.begin(), ms.end());
    if (starts.size() == 1 && windows > 1)
        throw std::runtime_error("rcf: no admissible block window found in the sequence");
    SplitMix64 rng(seed);
    double best = 0;
    for (int i = 0; i < windows; ++i) {
        std::int64_t m = starts[rng.below(starts.size())];
        std::int64_t max_n = std::min<std::int64_t>(m + 24, 39);
        std::int64_t n = m + 1 + static_cast<std::int64_t>(rng.below(std::max<std::int64_t>(1, max_n - m)));
        Mat3 bmn = d.incidence_range(m, n);
        Mat3 b0n = d.incidence_range(0, n);
        Vec3 one_n{};
        for (int j = 0; j < 3; ++j) one_n[j] = static_cast<double>(b0n.col_sum(j));  // ^tB 1
        best = std::max(best, inf_norm_restricted(bmn, one_n));
    }
    return best;
}

/// Greedy billiard word with abelianization `target`: each step appends the
/// letter that keeps the projected prefix smallest without exceeding the
/// target counts.  Verifies the prefix bound <= 1 + tol on every step; a
/// greedy failure would contradict the underlying lemma and is reported as
/// an error.
inline std::string billiard_word(const std::array<std::int64_t, 3>& target,
                                 const Vec3& norm_reference = {1, 1, 1}) {
    std::int64_t total = target[0] + target[1] + target[2];
    if (total <= 0 || target[0] < 0 || target[1] < 0 || target[2] < 0)
        throw std::domain_error("rcf: billiard target must be a nonzero nonnegative vector");
    Vec3 x{double(target[0]), double(target[1]), double(target[2])};
    std::array<std::int64_t, 3> count{0, 0, 0};
    std::string w;
    w.reserve(static_cast<std::size_t>(total));
    for (std::int64_t stepi = 0; stepi < total; ++stepi) {
        int best = -1;
        double best_norm = 0;
        for (int c = 0; c < 3; ++c) {
            if (count[c] >= target[c]) continue;
            Vec3 l{double(count[0] + (c == 0)), double(count[1] + (c == 1)),
                   double(count[2] + (c == 2))};
            double v = norm_inf(pi_projection(x, norm_reference, l));
            if (best < 0 || v < best_norm) {
                best = c;
                best_norm = v;
            }
        }
        if (best < 0 || best_norm > 1.0 + 1e-9)
            throw std::runtime_error("rcf: greedy billiard construction failed the prefix bound");
        count[best] += 1;
        w.push_back(static_cast<char>('1' + best));
    }
    return w;
}

/// Largest prefix projection ||pi_{x,1}(l(p))||_inf of a word.
inline double billiard_prefix_sup(const std::string& w, const std::array<std::int64_t, 3>& target) {
    Vec3 x{double(target[0]), double(target[1]), double(target[2])};
    Vec3 one{1, 1, 1};
    std::array<std::int64_t, 3> count{0, 0, 0};
    double sup = 0;
    for (char c : w) {
        count[c - '1'] += 1;
        Vec3 l{double(count[0]), double(count[1]), double(count[2])};
        sup = std::max(sup, norm_inf(pi_projection(x, one, l)));
    }
    return sup;
}

}  // namespace rcf
