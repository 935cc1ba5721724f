#pragma once

#include <array>
#include <stdexcept>
#include <string>

#include "rcf/exact.hpp"

namespace rcf {

/// Nonerasing endomorphism of {1,2,3}*, stored by its letter images.
struct Substitution {
    std::array<std::string, 3> images;  // images of '1','2','3'

    const std::string& image(char letter) const {
        if (letter < '1' || letter > '3') throw std::domain_error("rcf: letter must be 1..3");
        return images[letter - '1'];
    }

    std::string apply(const std::string& w) const {
        std::string out;
        std::size_t len = 0;
        for (char c : w) len += image(c).size();
        out.reserve(len);
        for (char c : w) out += image(c);
        return out;
    }

    /// Incidence matrix B: B[i][j] = number of letters i+1 in the image of j+1.
    Mat3 incidence() const {
        Mat3 b{};
        for (int j = 0; j < 3; ++j)
            for (char c : images[j]) b.a[c - '1'][j] += 1;
        return b;
    }

    /// Composition (this o other): first apply other, then this.
    Substitution compose(const Substitution& other) const {
        Substitution r;
        for (int j = 0; j < 3; ++j) r.images[j] = apply(other.images[j]);
        return r;
    }

    bool left_proper() const {
        return images[0].front() == images[1].front() && images[1].front() == images[2].front();
    }
    bool right_proper() const {
        return images[0].back() == images[1].back() && images[1].back() == images[2].back();
    }

    static Substitution identity() { return {{"1", "2", "3"}}; }
};

/// The four substitutions attached to the Reverse map, index 1..4.
/// Their incidence matrices are exactly the branch matrices.
inline const Substitution& sigma(int i) {
    static const std::array<Substitution, 4> tbl = {
        Substitution{{"1", "21", "31"}},
        Substitution{{"12", "2", "32"}},
        Substitution{{"13", "23", "3"}},
        Substitution{{"23", "31", "12"}},
    };
    if (i < 1 || i > 4) throw std::domain_error("rcf: substitution index out of range");
    return tbl[i - 1];
}

/// Abelianization vector (|w|_1, |w|_2, |w|_3).
inline std::array<std::int64_t, 3> abelianization(const std::string& w) {
    std::array<std::int64_t, 3> l{};
    for (char c : w) {
        if (c < '1' || c > '3') throw std::domain_error("rcf: letter must be 1..3");
        l[c - '1'] += 1;
    }
    return l;
}

}  // namespace rcf
