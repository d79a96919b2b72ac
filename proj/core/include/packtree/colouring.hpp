#pragma once

#include <vector>

#include "packtree/tree.hpp"

namespace packtree {

/// A total candidate k-packing: colours[v] in {1..k}, indexed by vertex.
struct Colouring {
    int k = 0;
    std::vector<int> colours;

    Colouring() = default;
    Colouring(int k_, std::vector<int> colours_);

    int order() const { return static_cast<int>(colours.size()); }
    int operator[](int v) const { return colours[v]; }
    bool operator==(const Colouring& o) const = default;
};

/// Class-size vector (c_1,...,c_k); monotone iff c_1 >= ... >= c_k.
struct Profile {
    std::vector<int> sizes;
    bool monotone = false;

    bool operator==(const Profile& o) const = default;
};

struct Violation {
    int colour;
    int u, v;  // u < v
    int dist;
    bool operator==(const Violation& o) const = default;
};

struct VerificationReport {
    bool valid = false;
    std::vector<Violation> violations;   // ascending (colour, u, v)
    std::vector<int> degree_flags;       // 1-vertices of degree >= k (diagnostic)
};

/// Checks that every colour class i is an i-packing (pairwise distance > i).
/// Throws SizeMismatch if the colouring does not cover exactly t's vertices.
VerificationReport verify_packing(const Tree& t, const Colouring& c);

Profile colour_profile(const Colouring& c);

}  // namespace packtree
