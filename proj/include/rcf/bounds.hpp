#pragma once

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <thread>
#include <vector>

#include "rcf/cylinder.hpp"
#include "rcf/density.hpp"
#include "rcf/dfield.hpp"
#include "rcf/quadrature.hpp"
#include "rcf/sorted.hpp"

namespace rcf {

/// Result of one certified-bound run.
struct BoundReport {
    int n = 0;
    double l1 = 0;
    double l2 = 0;
    double total = 0;
    double accumulated_error = 0;  // conservative rounding budget
    std::int64_t word_count = 0;
    double wall_time_seconds = 0;
    MatrixNorm norm = MatrixNorm::kInduced;
    int threads = 1;
    bool sorted = false;
};

enum class L1Domain {
    kCylinder,       // exact measure of the constant-branch cylinder (default)
    kBoundingSquare  // the coordinate square [0, 1/(n+1)]^2 containing it
};

/// First part of the bound: (3/n) log(2n(n-1)/(n+1) - 1) times the invariant
/// measure of the branch-1 constant cylinder (a triangle with one corner at
/// the density singularity; the two other constant cylinders have the same
/// measure by symmetry).
inline QuadResult l1_bound_quad(int n, L1Domain domain = L1Domain::kCylinder,
                                double tol = 1e-10) {
    if (n < 2) throw std::invalid_argument("rcf: l1_bound needs n >= 2");
    double a = 1.0 / (n + 1);
    QuadResult mu{};
    if (domain == L1Domain::kCylinder) {
        mu = integrate_triangle(density_chart, 0, 0, a, 0, 0, a, tol);
    } else {
        auto r1 = integrate_triangle(density_chart, 0, 0, a, 0, a, a, tol);
        auto r2 = integrate_triangle(density_chart, 0, 0, a, a, 0, a, tol);
        mu = {r1.value + r2.value, r1.error_estimate + r2.error_estimate};
    }
    double factor = (3.0 / n) * std::log(2.0 * n * (n - 1.0) / (n + 1.0) - 1.0);
    return {factor * mu.value, std::fabs(factor) * mu.error_estimate};
}

inline double l1_bound(int n, L1Domain domain = L1Domain::kCylinder) {
    return l1_bound_quad(n, domain).value;
}

/// Sorted analogue: (1/n) log(1 + n/(n+1)) times the sorted invariant
/// measure of the (1,id)-constant cylinder.
inline QuadResult sorted_l1_bound_quad(int n, double tol = 1e-10) {
    if (n < 2) throw std::invalid_argument("rcf: sorted_l1_bound needs n >= 2");
    double a = 1.0 / (n + 1), b = 1.0 / (2.0 * n + 1);
    QuadResult mu = integrate_triangle(sorted_density_chart, 0, 0, a, 0, b, b, tol);
    double factor = std::log(1.0 + double(n) / (n + 1.0)) / n;
    return {factor * mu.value, factor * mu.error_estimate};
}

namespace detail {

struct Kahan {
    double sum = 0, carry = 0;
    void add(double v) {
        double y = v - carry;
        double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

/// Per-subtree accumulation of the cylinder sums.  pos/neg use the
/// sign-matched density extremes (the certified bound); pos_lo/neg_lo swap
/// them, giving the matching lower bound of the integral.
struct TreeSums {
    Kahan pos, neg, pos_lo, neg_lo, abs_sum;
    std::int64_t count = 0;

    void merge(const TreeSums& o) {
        pos.add(o.pos.sum);
        neg.add(o.neg.sum);
        pos_lo.add(o.pos_lo.sum);
        neg_lo.add(o.neg_lo.sum);
        abs_sum.add(o.abs_sum.sum);
        count += o.count;
    }
};

template <bool Sorted>
struct LeafEval {
    MatrixNorm norm;

    void operator()(const Mat3& p, TreeSums& s) const {
        double x1[3], x2[3], fmax, fmin, leb;
        AffineField2x2 field;
        if constexpr (!Sorted) {
            double r[3], vx[3][3];
            for (int i = 0; i < 3; ++i) {
                r[i] = static_cast<double>(p.col_sum(i));
                for (int j = 0; j < 3; ++j) vx[i][j] = static_cast<double>(p.a[j][i]) / r[i];
                x1[i] = vx[i][1];
                x2[i] = vx[i][2];
            }
            leb = std::fabs(static_cast<double>(mat_det(p))) / (2.0 * r[0] * r[1] * r[2]);
            fmax = 1;
            fmin = 1;
            for (int j = 0; j < 3; ++j) {
                double mx = 0, mn = 1e300;
                for (int i = 0; i < 3; ++i) {
                    double f = 1.0 / (1.0 - vx[i][j]);
                    mx = std::max(mx, f);
                    mn = std::min(mn, f);
                }
                fmax *= mx;
                fmin *= mn;
            }
            field = d_field_from_cocycle(p.transposed());
        } else {
            for (int k = 0; k < 3; ++k) {
                std::int64_t v0 = 0, v1 = 0, v2 = 0;
                for (int j = 0; j <= k; ++j) {
                    v0 += p.a[0][j];
                    v1 += p.a[1][j];
                    v2 += p.a[2][j];
                }
                x1[k] = static_cast<double>(v1) / static_cast<double>(v0);
                x2[k] = static_cast<double>(v2) / static_cast<double>(v0);
            }
            double ax = x1[1] - x1[0], ay = x2[1] - x2[0];
            double bx = x1[2] - x1[0], by = x2[2] - x2[0];
            leb = 0.5 * std::fabs(ax * by - ay * bx);
            fmax = 1;
            fmin = 1;
            auto fold = [&](auto g) {
                double mx = 0, mn = 1e300;
                for (int i = 0; i < 3; ++i) {
                    double f = g(x1[i], x2[i]);
                    mx = std::max(mx, f);
                    mn = std::min(mn, f);
                }
                fmax *= mx;
                fmin *= mn;
            };
            fold([](double u, double) { return 1.0 / (1.0 + u); });
            fold([](double, double v) { return 1.0 / (1.0 + v); });
            fold([](double u, double v) { return 1.0 / (u + v); });
            field = sorted_d_field(p);
        }
        double nmax = 0;
        for (int i = 0; i < 3; ++i)
            nmax = std::max(nmax, matrix_norm_2x2(field.evaluate(x1[i], x2[i]), norm));
        double lg = std::log(nmax);
        if (lg > 0) {
            s.pos.add(fmax * leb * lg);
            s.pos_lo.add(fmin * leb * lg);
            s.abs_sum.add(fmax * leb * lg);
        } else if (lg < 0) {
            s.neg.add(fmin * leb * lg);
            s.neg_lo.add(fmax * leb * lg);
            s.abs_sum.add(-fmax * leb * lg);
        }
        s.count++;
    }
};

template <bool Sorted, class Leaf>
void dfs(int depth, int n, const Mat3& p, bool allsame, int sym, const Leaf& leaf, TreeSums& s) {
    if (depth == n) {
        if constexpr (Sorted) {
            if (allsame) return;  // (1,id)^n handled by the l1 part
        } else {
            if (allsame && sym < 4) return;  // constant Arnoux-Rauzy words
        }
        leaf(p, s);
        return;
    }
    for (int c = 0; c < 4; ++c) {
        Mat3 q = mat_mul(p, Sorted ? sorted_matrix(c) : branch_matrix(c + 1));
        dfs<Sorted>(depth + 1, n, q, allsame && (Sorted ? c == 0 : c + 1 == sym), sym, leaf, s);
    }
}

/// Deterministic parallel traversal: subtrees below a fixed split depth are
/// processed by a worker pool and merged in canonical subtree order, so the
/// result is bit-identical for every thread count.
template <bool Sorted>
TreeSums traverse(int n, MatrixNorm norm, int threads) {
    LeafEval<Sorted> leaf{norm};
    const int split = n >= 5 ? 3 : 0;
    if (split == 0) {
        TreeSums s;
        for (int c = 0; c < 4; ++c) {
            Mat3 q = Sorted ? sorted_matrix(c) : branch_matrix(c + 1);
            dfs<Sorted>(1, n, q, Sorted ? c == 0 : true, Sorted ? 0 : c + 1, leaf, s);
        }
        return s;
    }
    const int nsub = 1 << (2 * split);
    std::vector<TreeSums> slots(nsub);
    std::atomic<int> next{0};
    auto work = [&] {
        for (;;) {
            int k = next.fetch_add(1);
            if (k >= nsub) return;
            Mat3 p = Mat3::identity();
            bool allsame = true;
            int sym = (k >> (2 * (split - 1))) & 3;
            for (int d = 0; d < split; ++d) {
                int c = (k >> (2 * (split - 1 - d))) & 3;
                p = mat_mul(p, Sorted ? sorted_matrix(c) : branch_matrix(c + 1));
                allsame = allsame && c == (Sorted ? 0 : sym);
            }
            dfs<Sorted>(split, n, p, allsame, Sorted ? 0 : sym + 1, leaf, slots[k]);
        }
    };
    int nt = std::max(1, threads);
    std::vector<std::thread> pool;
    pool.reserve(nt - 1);
    for (int t = 1; t < nt; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    TreeSums s;
    for (const auto& slot : slots) s.merge(slot);
    return s;
}

}  // namespace detail

inline constexpr double kPerTermErrorFloor = 0x1.0p-48;
inline constexpr double kPerTermRelativeError = 0x1.0p-44;

/// Exhaustive cylinder sum L2(n) over {1,2,3,4}^n minus the three constant
/// Arnoux-Rauzy words.  Deterministic across thread counts.
inline BoundReport l2_bound_report(int n, MatrixNorm norm = MatrixNorm::kInduced,
                                   int threads = 0) {
    if (n < 2 || n > 14) throw std::invalid_argument("rcf: l2_bound supports 2 <= n <= 14");
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    auto t0 = std::chrono::steady_clock::now();
    detail::TreeSums s = detail::traverse<false>(n, norm, threads);
    double pref = 4.0 / (M_PI * M_PI * n);
    BoundReport r;
    r.n = n;
    r.norm = norm;
    r.threads = threads;
    r.l2 = pref * (s.pos.sum + s.neg.sum);
    r.word_count = s.count;
    r.accumulated_error =
        double(s.count) * kPerTermErrorFloor + pref * s.abs_sum.sum * kPerTermRelativeError;
    r.wall_time_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

inline double l2_bound(int n, MatrixNorm norm = MatrixNorm::kInduced, int threads = 0) {
    return l2_bound_report(n, norm, threads).l2;
}

/// Swapped-extremes variant of the cylinder sum; together with l2_bound it
/// brackets the true integral I2(n).
inline std::pair<double, double> l2_bracket(int n, MatrixNorm norm = MatrixNorm::kInduced,
                                            int threads = 0) {
    detail::TreeSums s = detail::traverse<false>(n, norm, threads <= 0 ? 1 : threads);
    double pref = 4.0 / (M_PI * M_PI * n);
    return {pref * (s.pos_lo.sum + s.neg_lo.sum), pref * (s.pos.sum + s.neg.sum)};
}

/// Full bound report: L1 + L2 with the error budget.
inline BoundReport bound_report(int n, MatrixNorm norm = MatrixNorm::kInduced, int threads = 0,
                                L1Domain domain = L1Domain::kCylinder) {
    auto t0 = std::chrono::steady_clock::now();
    BoundReport r = l2_bound_report(n, norm, threads);
    QuadResult l1 = l1_bound_quad(n, domain);
    r.l1 = l1.value;
    r.total = r.l1 + r.l2;
    r.accumulated_error += l1.error_estimate + 0x1.0p-48;
    r.wall_time_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

/// Sorted-variant bound L1'(n) + L2'(n) over the four-letter sorted alphabet
/// minus the constant (1,id) word.
inline BoundReport sorted_bound_report(int n, MatrixNorm norm = MatrixNorm::kInduced,
                                       int threads = 0) {
    if (n < 2 || n > 13) throw std::invalid_argument("rcf: sorted bound supports 2 <= n <= 13");
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    auto t0 = std::chrono::steady_clock::now();
    detail::TreeSums s = detail::traverse<true>(n, norm, threads);
    double pref = 24.0 / (M_PI * M_PI * n);
    BoundReport r;
    r.n = n;
    r.norm = norm;
    r.threads = threads;
    r.sorted = true;
    r.l2 = pref * (s.pos.sum + s.neg.sum);
    QuadResult l1 = sorted_l1_bound_quad(n);
    r.l1 = l1.value;
    r.total = r.l1 + r.l2;
    r.word_count = s.count;
    r.accumulated_error = double(s.count) * kPerTermErrorFloor +
                          pref * s.abs_sum.sum * kPerTermRelativeError + l1.error_estimate;
    r.wall_time_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

inline std::pair<double, double> sorted_l_bounds(int n, MatrixNorm norm = MatrixNorm::kInduced,
                                                 int threads = 0) {
    BoundReport r = sorted_bound_report(n, norm, threads);
    return {r.l1, r.l2};
}

}  // namespace rcf
