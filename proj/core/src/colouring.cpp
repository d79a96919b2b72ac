#include "packtree/colouring.hpp"

#include <algorithm>
#include <string>
#include <tuple>

namespace packtree {

Colouring::Colouring(int k_, std::vector<int> colours_)
    : k(k_), colours(std::move(colours_)) {
    if (k < 1) throw BadParameter("palette size k must be >= 1");
    for (int c : colours) {
        if (c < 1 || c > k) {
            throw BadParameter("colour " + std::to_string(c) +
                               " outside {1.." + std::to_string(k) + "}");
        }
    }
}

VerificationReport verify_packing(const Tree& t, const Colouring& c) {
    if (c.order() != t.order()) {
        throw SizeMismatch("colouring covers " + std::to_string(c.order()) +
                           " vertices, tree has " + std::to_string(t.order()));
    }
    VerificationReport rep;
    const int n = t.order();
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (c[u] == c[v] && t.distance(u, v) <= c[u]) {
                rep.violations.push_back({c[u], u, v, t.distance(u, v)});
            }
        }
    }
    std::sort(rep.violations.begin(), rep.violations.end(),
              [](const Violation& a, const Violation& b) {
                  return std::tie(a.colour, a.u, a.v) < std::tie(b.colour, b.u, b.v);
              });
    for (int v = 0; v < n; ++v) {
        if (c[v] == 1 && t.degree(v) >= c.k) rep.degree_flags.push_back(v);
    }
    rep.valid = rep.violations.empty();
    return rep;
}

Profile colour_profile(const Colouring& c) {
    Profile p;
    p.sizes.assign(c.k, 0);
    for (int col : c.colours) ++p.sizes[col - 1];
    p.monotone = true;
    for (int i = 1; i < c.k; ++i) {
        if (p.sizes[i - 1] < p.sizes[i]) {
            p.monotone = false;
            break;
        }
    }
    return p;
}

}  // namespace packtree
