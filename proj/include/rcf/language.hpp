#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "rcf/directive.hpp"
#include "rcf/sadic_checks.hpp"
#include "rcf/substitution.hpp"

namespace rcf {

/// Factors of the depth-n images of the three letters, deduplicated up to a
/// length cap.  Factor-closed by construction.
struct LanguageSample {
    int depth = 0;
    int cap = 0;
    std::array<std::string, 3> images;      // tau_{[0,depth)}(i)
    std::vector<std::string> factors;       // deduplicated, sorted
};

inline LanguageSample generate_language(const DirectiveSequence& d, int depth, int cap,
                                        std::size_t memory_guard = std::size_t(1) << 27) {
    if (depth < 0 || cap < 1) throw std::invalid_argument("rcf: bad language parameters");
    LanguageSample s;
    s.depth = depth;
    s.cap = cap;
    s.images = {"1", "2", "3"};
    for (int k = depth - 1; k >= 0; --k) {
        const Substitution& sub = sigma(d.symbol(k));
        std::size_t total = 0;
        for (auto& w : s.images) {
            w = sub.apply(w);
            total += w.size();
        }
        if (total > memory_guard) throw std::length_error("rcf: language images exceed memory guard");
    }
    std::unordered_set<std::string> seen;
    for (const auto& w : s.images) {
        std::size_t n = w.size();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t len = 1; len <= std::min<std::size_t>(cap, n - i); ++len)
                seen.insert(w.substr(i, len));
    }
    s.factors.assign(seen.begin(), seen.end());
    std::sort(s.factors.begin(), s.factors.end());
    return s;
}

namespace detail {

/// Per-length letter-count envelopes over all windows of the given words.
/// envelope[len][letter] = {min, max} over every factor of that length.
struct CountEnvelope {
    std::vector<std::array<std::int64_t, 3>> lo, hi;

    explicit CountEnvelope(std::size_t cap)
        : lo(cap + 1, {INT64_MAX, INT64_MAX, INT64_MAX}), hi(cap + 1, {INT64_MIN, INT64_MIN, INT64_MIN}) {}

    void scan(const std::string& w, std::size_t cap) {
        std::size_t n = w.size();
        std::vector<std::array<std::int64_t, 3>> prefix(n + 1, {0, 0, 0});
        for (std::size_t i = 0; i < n; ++i) {
            prefix[i + 1] = prefix[i];
            prefix[i + 1][w[i] - '1'] += 1;
        }
        for (std::size_t len = 1; len <= std::min(cap, n); ++len)
            for (std::size_t i = 0; i + len <= n; ++i)
                for (int c = 0; c < 3; ++c) {
                    std::int64_t v = prefix[i + len][c] - prefix[i][c];
                    lo[len][c] = std::min(lo[len][c], v);
                    hi[len][c] = std::max(hi[len][c], v);
                }
    }

    std::int64_t balance_constant() const {
        std::int64_t best = 0;
        for (std::size_t len = 1; len < lo.size(); ++len) {
            if (hi[len][0] == INT64_MIN) continue;
            for (int c = 0; c < 3; ++c) best = std::max(best, hi[len][c] - lo[len][c]);
        }
        return best;
    }
};

}  // namespace detail

/// Exact letter-balance constant of a single word: the smallest C such that
/// every pair of equal-length factors differs by at most C in each letter
/// count, computed by per-length envelopes.
inline std::int64_t letter_balance_constant(const std::string& w,
                                            std::size_t cap = SIZE_MAX) {
    detail::CountEnvelope env(std::min(cap, w.size()));
    env.scan(w, std::min(cap, w.size()));
    return env.balance_constant();
}

/// Letter-balance constant of a language sample (pairs may come from
/// different images).
inline std::int64_t letter_balance(const LanguageSample& s) {
    std::size_t cap = s.cap;
    detail::CountEnvelope env(cap);
    for (const auto& w : s.images) env.scan(w, cap);
    return env.balance_constant();
}

/// The balance constant grows by at most 4 under sigma_1..sigma_3 and by at
/// most 2 under sigma_4.
inline bool balance_growth_check(const std::string& u, int branch) {
    if (u.empty()) throw std::invalid_argument("rcf: balance_growth_check needs a nonempty word");
    std::int64_t before = letter_balance_constant(u);
    std::int64_t after = letter_balance_constant(sigma(branch).apply(u));
    return after <= before + (branch == 4 ? 2 : 4);
}

/// Per-factor occurrence-count discrepancy table: for each factor v up to
/// table_cap, the largest difference of |w|_v over sampled factors w of equal
/// length.  Absent factors count as zero occurrences.
struct FactorBalanceRow {
    std::string factor;
    std::int64_t max_discrepancy;
};

inline std::vector<FactorBalanceRow> factor_balance_table(const LanguageSample& s,
                                                          std::size_t table_cap) {
    table_cap = std::min<std::size_t>(table_cap, s.cap);
    // group sampled factors by length
    std::map<std::size_t, std::vector<const std::string*>> by_len;
    for (const auto& f : s.factors) by_len[f.size()].push_back(&f);
    // candidate v's: sampled factors up to table_cap
    std::vector<FactorBalanceRow> rows;
    for (const auto& v : s.factors) {
        if (v.size() > table_cap) continue;
        std::int64_t disc = 0;
        for (const auto& [len, group] : by_len) {
            if (len < v.size()) continue;
            std::int64_t mn = INT64_MAX, mx = 0;
            for (const std::string* w : group) {
                std::int64_t cnt = 0;
                for (std::size_t i = 0; i + v.size() <= w->size(); ++i)
                    if (w->compare(i, v.size(), v) == 0) ++cnt;
                mn = std::min(mn, cnt);
                mx = std::max(mx, cnt);
            }
            disc = std::max(disc, mx - mn);
        }
        rows.push_back({v, disc});
    }
    return rows;
}

struct BalanceReport {
    std::int64_t letter_balance_constant = 0;
    double projection_sup = 0;
    Vec3 frequency_vector{};
    double cone_diameter = 0;
    std::vector<FactorBalanceRow> factor_balance;
    int depth = 0;
    int cap = 0;
    std::int64_t factor_count = 0;
};

/// Largest projected abelianization over the sampled factors, with the
/// projection along the estimated generalized right eigenvector.
inline double projection_sup(const LanguageSample& s, const Vec3& eigenvector) {
    double sup = 0;
    Vec3 one{1, 1, 1};
    for (const auto& f : s.factors) {
        auto l = abelianization(f);
        Vec3 lv{double(l[0]), double(l[1]), double(l[2])};
        sup = std::max(sup, norm_inf(pi_projection(eigenvector, one, lv)));
    }
    return sup;
}

/// Empirical witness of the balancedness theorem for one directive sequence:
/// balance constant, projection sup and factor table at the given depth.
inline BalanceReport theorem3_witness(const DirectiveSequence& d, int depth, int cap,
                                      std::size_t table_cap = 6) {
    LanguageSample s = generate_language(d, depth, cap);
    EigenvectorEstimate ev = right_eigenvector(d, depth);
    BalanceReport r;
    r.depth = depth;
    r.cap = cap;
    r.letter_balance_constant = letter_balance(s);
    r.frequency_vector = ev.direction;
    r.cone_diameter = ev.cone_diameter;
    r.projection_sup = projection_sup(s, ev.direction);
    r.factor_balance = factor_balance_table(s, table_cap);
    r.factor_count = static_cast<std::int64_t>(s.factors.size());
    return r;
}

}  // namespace rcf
