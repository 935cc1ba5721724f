#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "rcf/geometry.hpp"

namespace rcf {

/// Branch index of the Reverse map, 1..4.
using Branch = int;

/// Coordinates this close to the simplex boundary terminate an orbit; the
/// Rauzy gasket has measure zero and iteration beyond it is meaningless.
inline constexpr double kGasketTol = 1e-14;

/// Thrown when an orbit reaches the gasket-adjacent boundary strip.
struct OrbitTerminated : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Branch classification: strict test 2*x_i > 1 for branches 1..3, else 4.
/// Boundary ties land in branch 4, matching the non-strict inequalities
/// defining the reverse cell; the boundary has measure zero.
inline Branch classify(const SimplexPoint& x) {
    if (2 * x.x0 > 1) return 1;
    if (2 * x.x1 > 1) return 2;
    if (2 * x.x2 > 1) return 3;
    return 4;
}

/// One application of the Reverse map; returns the image and the branch taken.
inline std::pair<SimplexPoint, Branch> step(const SimplexPoint& x) {
    Branch b = classify(x);
    double y0, y1, y2;
    switch (b) {
        case 1: y0 = x.x0 - x.x1 - x.x2; y1 = x.x1; y2 = x.x2; break;
        case 2: y0 = x.x0; y1 = x.x1 - x.x0 - x.x2; y2 = x.x2; break;
        case 3: y0 = x.x0; y1 = x.x1; y2 = x.x2 - x.x0 - x.x1; break;
        default: y0 = -x.x0 + x.x1 + x.x2; y1 = x.x0 - x.x1 + x.x2; y2 = x.x0 + x.x1 - x.x2; break;
    }
    if (y0 <= kGasketTol || y1 <= kGasketTol || y2 <= kGasketTol)
        throw OrbitTerminated("rcf: orbit reached the gasket-adjacent boundary");
    double s = y0 + y1 + y2;
    return {{y0 / s, y1 / s, y2 / s}, b};
}

struct JumpResult {
    SimplexPoint point;
    std::int64_t return_time;
    std::vector<std::uint8_t> word;  // traversed branches, always ends with 4
};

/// Jump transformation: iterate until a branch-4 application completes.
inline JumpResult jump_step(const SimplexPoint& x, std::int64_t cap = 1000000) {
    JumpResult r;
    r.point = x;
    r.return_time = 0;
    for (std::int64_t i = 0; i < cap; ++i) {
        auto [y, b] = step(r.point);
        r.point = y;
        r.word.push_back(static_cast<std::uint8_t>(b));
        ++r.return_time;
        if (b == 4) return r;
    }
    throw OrbitTerminated("rcf: jump transformation exceeded the iteration cap");
}

}  // namespace rcf
