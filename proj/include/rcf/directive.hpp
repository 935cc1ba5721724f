#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "rcf/rng.hpp"
#include "rcf/substitution.hpp"

namespace rcf {

/// A lazily extended directive sequence over {sigma_1..sigma_4}.
///
/// Three generators:
///   - an explicit finite prefix, repeated periodically;
///   - a seeded i.i.d.-uniform stream;
///   - a seeded stream with quasi-periodically injected runs of the
///     positive block (sigma_1 sigma_2 sigma_3)^k, spaced so that the
///     density of block occurrences matches a configured rate.
///
/// All symbols are pure functions of (seed, construction parameters), so any
/// prefix is recomputable without storing the stream.
class DirectiveSequence {
  public:
    static DirectiveSequence periodic(const std::string& pattern) {
        if (pattern.empty()) throw std::invalid_argument("rcf: empty directive pattern");
        DirectiveSequence d;
        d.mode_ = Mode::kPeriodic;
        for (char c : pattern) {
            if (c < '1' || c > '4')
                throw std::invalid_argument("rcf: directive pattern letters must be 1..4");
            d.pattern_.push_back(c - '0');
        }
        return d;
    }

    static DirectiveSequence random(std::uint64_t seed) {
        DirectiveSequence d;
        d.mode_ = Mode::kRandom;
        d.seed_ = seed;
        return d;
    }

    /// Seeded stream with (sigma_1 sigma_2 sigma_3)^block_periods runs whose
    /// occurrence density (overlapping occurrences of the length-3k block per
    /// symbol) targets `rate`.
    static DirectiveSequence random_with_blocks(std::uint64_t seed, double rate,
                                                int block_periods = 9) {
        if (!(rate > 0) || rate > 0.25)
            throw std::invalid_argument("rcf: block injection rate must be in (0, 0.25]");
        if (block_periods < 1) throw std::invalid_argument("rcf: block_periods must be >= 1");
        DirectiveSequence d;
        d.mode_ = Mode::kBlocks;
        d.seed_ = seed;
        d.rate_ = rate;
        d.block_periods_ = block_periods;
        // A run of (s1 s2 s3)^r contains r-k+1 copies of the length-3k block
        // in 3r symbols; r is chosen large enough that the target density is
        // reachable, then the gap between runs makes it exact.
        int k = block_periods;
        int r = 2 * k;
        while ((r - k + 1) < rate * (3 * r + 1)) ++r;
        d.run_periods_ = r;
        double spacing = (r - k + 1) / rate - 3.0 * r;
        d.gap_ = spacing < 1 ? 1 : static_cast<std::int64_t>(spacing + 0.5);
        return d;
    }

    /// Substitution index (1..4) at position i.
    int symbol(std::int64_t i) const {
        extend(i);
        return cache_[static_cast<std::size_t>(i)];
    }

    /// Composition tau_k o ... o tau_{l-1} (identity when k == l).
    Substitution compose_range(std::int64_t k, std::int64_t l,
                               std::size_t image_cap = std::size_t(1) << 26) const {
        if (k > l) throw std::invalid_argument("rcf: compose_range needs k <= l");
        Substitution s = Substitution::identity();
        for (std::int64_t j = l - 1; j >= k; --j) {
            s = sigma(symbol(j)).compose(s);
            for (const auto& im : s.images)
                if (im.size() > image_cap)
                    throw std::length_error("rcf: composed image exceeds length cap");
        }
        return s;
    }

    /// Incidence matrix of tau_{[k,l)}.
    Mat3 incidence_range(std::int64_t k, std::int64_t l) const {
        Mat3 p = Mat3::identity();
        for (std::int64_t j = k; j < l; ++j) p = mat_mul(p, branch_matrix(symbol(j)));
        return p;
    }

    /// Observed density of block occurrences in the first n symbols
    /// (overlapping occurrences of (1 2 3)^block_periods as a word over the
    /// directive alphabet).
    double block_density(std::int64_t n) const {
        extend(n + 3 * block_periods_);
        int len = 3 * block_periods_;
        std::int64_t hits = 0;
        for (std::int64_t i = 0; i + len <= n; ++i) {
            bool ok = true;
            for (int j = 0; j < len && ok; ++j) ok = cache_[i + j] == 1 + (j % 3);
            hits += ok;
        }
        return static_cast<double>(hits) / static_cast<double>(n);
    }

    /// Positions m with tau_{[m-3, m+3)} = (sigma_1 sigma_2 sigma_3)^2,
    /// searched in [3, limit).
    std::vector<std::int64_t> admissible_positions(std::int64_t limit) const {
        extend(limit + 3);
        std::vector<std::int64_t> out;
        for (std::int64_t m = 3; m < limit; ++m) {
            bool ok = true;
            for (int j = -3; j < 3 && ok; ++j) ok = cache_[m + j] == 1 + ((j + 3) % 3);
            if (ok) out.push_back(m);
        }
        return out;
    }

    double configured_rate() const { return rate_; }
    int block_periods() const { return block_periods_; }

  private:
    enum class Mode { kPeriodic, kRandom, kBlocks };

    void extend(std::int64_t upto) const {
        while (static_cast<std::int64_t>(cache_.size()) <= upto) {
            switch (mode_) {
                case Mode::kPeriodic:
                    cache_.push_back(pattern_[cache_.size() % pattern_.size()]);
                    break;
                case Mode::kRandom:
                    cache_.push_back(1 + static_cast<int>(SplitMix64::at(seed_, cache_.size()) % 4));
                    break;
                case Mode::kBlocks: {
                    if (until_run_ == 0) {
                        for (int j = 0; j < 3 * run_periods_; ++j)
                            cache_.push_back(1 + (j % 3));
                        // seeded jitter of +-20% keeps the spacing aperiodic
                        std::uint64_t h = SplitMix64::at(seed_, 0x10000000ull + runs_made_);
                        double jitter = 0.8 + 0.4 * double(h >> 11) * 0x1.0p-53;
                        until_run_ = std::max<std::int64_t>(1, std::int64_t(double(gap_) * jitter + 0.5));
                        ++runs_made_;
                    } else {
                        cache_.push_back(1 + static_cast<int>(SplitMix64::at(seed_, cache_.size()) % 4));
                        --until_run_;
                    }
                    break;
                }
            }
        }
    }

    Mode mode_ = Mode::kRandom;
    std::uint64_t seed_ = 0;
    std::vector<int> pattern_;
    double rate_ = 0;
    int block_periods_ = 9;
    int run_periods_ = 18;
    std::int64_t gap_ = 0;
    mutable std::vector<int> cache_;
    mutable std::int64_t until_run_ = 1;
    mutable std::int64_t runs_made_ = 0;
};

}  // namespace rcf
