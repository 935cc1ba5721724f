#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "rcf/dfield.hpp"
#include "rcf/reverse_map.hpp"
#include "rcf/rng.hpp"

namespace rcf {

struct SpectrumEstimate {
    double lambda1 = 0, lambda2 = 0, lambda3 = 0;
    double stderr_lambda2 = 0;
    std::int64_t iterations = 0;
    std::uint64_t seed = 0;
};

/// Lebesgue-uniform point of the simplex.
inline SimplexPoint random_simplex_point(SplitMix64& rng) {
    double a = rng.uniform(), b = rng.uniform();
    if (a + b > 1) {
        a = 1 - a;
        b = 1 - b;
    }
    return {1 - a - b, a, b};
}

namespace detail {

struct Frame3 {
    double q[3][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};

    void multiply_left(const Mat3& t /* acts as ^tM */) {
        double nq[3][3];
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) {
                double s = 0;
                for (int k = 0; k < 3; ++k) s += static_cast<double>(t.a[k][r]) * q[k][c];
                nq[r][c] = s;
            }
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) q[r][c] = nq[r][c];
    }

    /// Modified Gram-Schmidt; returns the log of each column norm.
    std::array<double, 3> reorthonormalize() {
        std::array<double, 3> lg{};
        for (int c = 0; c < 3; ++c) {
            for (int p = 0; p < c; ++p) {
                double d = 0;
                for (int r = 0; r < 3; ++r) d += q[r][p] * q[r][c];
                for (int r = 0; r < 3; ++r) q[r][c] -= d * q[r][p];
            }
            double n2 = 0;
            for (int r = 0; r < 3; ++r) n2 += q[r][c] * q[r][c];
            double n = std::sqrt(n2);
            lg[c] = std::log(n);
            for (int r = 0; r < 3; ++r) q[r][c] /= n;
        }
        return lg;
    }
};

}  // namespace detail

/// Benettin-style estimate of the three Lyapunov exponents of the cocycle
/// along an orbit started Lebesgue-uniform after burn-in.  Orbits that reach
/// the gasket guard restart from the next substream.  Reproducible from seed.
inline SpectrumEstimate mc_spectrum(std::int64_t iterations, std::int64_t burn_in = 1000,
                                    int reortho_period = 8, std::uint64_t seed = 20250809) {
    if (iterations < 1) throw std::invalid_argument("rcf: mc_spectrum needs iterations >= 1");
    SplitMix64 rng(seed);
    SimplexPoint x = random_simplex_point(rng);
    for (std::int64_t i = 0; i < burn_in; ++i) {
        try {
            x = step(x).first;
        } catch (const OrbitTerminated&) {
            x = random_simplex_point(rng);
        }
    }
    detail::Frame3 frame;
    std::array<double, 3> acc{};
    const int nbatch = 64;
    std::vector<double> batch2(nbatch, 0.0);
    std::int64_t per_batch = std::max<std::int64_t>(1, iterations / nbatch);
    std::int64_t steps = 0;
    while (steps < iterations) {
        Branch b = classify(x);
        frame.multiply_left(branch_matrix(b));
        try {
            x = step(x).first;
        } catch (const OrbitTerminated&) {
            x = random_simplex_point(rng);
        }
        ++steps;
        if (steps % reortho_period == 0 || steps == iterations) {
            auto lg = frame.reorthonormalize();
            for (int c = 0; c < 3; ++c) acc[c] += lg[c];
            int bi = static_cast<int>(std::min<std::int64_t>((steps - 1) / per_batch, nbatch - 1));
            batch2[bi] += lg[1];
        }
    }
    SpectrumEstimate e;
    e.lambda1 = acc[0] / steps;
    e.lambda2 = acc[1] / steps;
    e.lambda3 = acc[2] / steps;
    e.iterations = steps;
    e.seed = seed;
    // batch-means standard error of lambda2
    double mean = acc[1] / nbatch;
    double var = 0;
    for (double v : batch2) var += (v - mean) * (v - mean);
    var /= (nbatch - 1.0);
    e.stderr_lambda2 = std::sqrt(var / nbatch) / per_batch;
    return e;
}

/// Top Lyapunov exponent of the 2x2 cocycle D along an orbit, with a
/// batch-means standard error.
struct DExponentEstimate {
    double value = 0;
    double stderr_value = 0;
    std::int64_t iterations = 0;
    std::uint64_t seed = 0;
};

inline DExponentEstimate mc_d_exponent(std::int64_t iterations, std::int64_t burn_in = 1000,
                                       std::uint64_t seed = 20250809) {
    SplitMix64 rng(seed);
    SimplexPoint x = random_simplex_point(rng);
    for (std::int64_t i = 0; i < burn_in; ++i) {
        try {
            x = step(x).first;
        } catch (const OrbitTerminated&) {
            x = random_simplex_point(rng);
        }
    }
    double v0 = 1, v1 = 0, acc = 0;
    const int nbatch = 64;
    std::vector<double> batch(nbatch, 0.0);
    std::int64_t per_batch = std::max<std::int64_t>(1, iterations / nbatch);
    for (std::int64_t i = 0; i < iterations; ++i) {
        Branch b = classify(x);
        AffineField2x2 f = d_field_from_cocycle(branch_matrix(b).transposed());
        Mat2 d = f.evaluate(x);
        double w0 = d.a11 * v0 + d.a12 * v1;
        double w1 = d.a21 * v0 + d.a22 * v1;
        double n = std::sqrt(w0 * w0 + w1 * w1);
        acc += std::log(n);
        batch[std::min<std::int64_t>(i / per_batch, nbatch - 1)] += std::log(n);
        v0 = w0 / n;
        v1 = w1 / n;
        try {
            x = step(x).first;
        } catch (const OrbitTerminated&) {
            x = random_simplex_point(rng);
        }
    }
    DExponentEstimate e;
    e.value = acc / iterations;
    e.iterations = iterations;
    e.seed = seed;
    double mean = acc / nbatch;
    double var = 0;
    for (double v : batch) var += (v - mean) * (v - mean);
    var /= (nbatch - 1.0);
    e.stderr_value = std::sqrt(var / nbatch) / per_batch;
    return e;
}

/// Uniform approximation exponent eta* = 1 - lambda2/lambda1.
inline double approx_exponent(const SpectrumEstimate& s) {
    if (!(s.lambda1 > 0)) throw std::domain_error("rcf: approx_exponent needs lambda1 > 0");
    return 1.0 - s.lambda2 / s.lambda1;
}

}  // namespace rcf
