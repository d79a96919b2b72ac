// Test-only oracles, independent of the library's search and counting
// paths.
#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "packtree/colouring.hpp"
#include "packtree/explorer.hpp"
#include "packtree/tree.hpp"

namespace oracles {

// All valid k-packings by trying every one of the k^n assignments;
// lexicographic by construction.
inline std::vector<packtree::Colouring> brute_force_packings(const packtree::Tree& t,
                                                             int k) {
    const int n = t.order();
    std::vector<packtree::Colouring> out;
    std::vector<int> c(n, 1);
    while (true) {
        packtree::Colouring col(k, c);
        if (packtree::verify_packing(t, col).valid) out.push_back(col);
        int i = n - 1;
        while (i >= 0 && c[i] == k) c[i--] = 1;
        if (i < 0) break;
        ++c[i];
    }
    return out;
}

// Maximum i-packing by subset enumeration (n <= 20 or so).
inline int brute_force_max_i_packing(const packtree::Tree& t, int i) {
    const int n = t.order();
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        int size = 0;
        bool ok = true;
        for (int u = 0; u < n && ok; ++u) {
            if (!(mask & (1u << u))) continue;
            ++size;
            for (int v = u + 1; v < n && ok; ++v) {
                if ((mask & (1u << v)) && t.distance(u, v) <= i) ok = false;
            }
        }
        if (ok) best = std::max(best, size);
    }
    return best;
}

// Distinct canonical forms over all labelled trees of order n via
// Prufer sequences (n^(n-2) of them; keep n <= 9).
inline std::set<std::string> prufer_canonical_classes(int n) {
    std::set<std::string> classes;
    if (n == 1) {
        classes.insert(packtree::canonical_form(packtree::Tree::single_vertex()));
        return classes;
    }
    if (n == 2) {
        classes.insert(packtree::canonical_form(packtree::Tree::from_edges({{0, 1}})));
        return classes;
    }
    std::vector<int> seq(n - 2, 0);
    while (true) {
        // Decode the Prufer sequence.
        std::vector<int> degree(n, 1);
        for (int x : seq) ++degree[x];
        std::vector<std::pair<int, int>> edges;
        std::set<int> leaves;
        for (int v = 0; v < n; ++v) {
            if (degree[v] == 1) leaves.insert(v);
        }
        std::vector<int> work = seq;
        for (int x : work) {
            int leaf = *leaves.begin();
            leaves.erase(leaves.begin());
            edges.emplace_back(leaf, x);
            if (--degree[x] == 1) leaves.insert(x);
        }
        int a = *leaves.begin(), b = *std::next(leaves.begin());
        edges.emplace_back(a, b);
        classes.insert(packtree::canonical_form(packtree::Tree::from_edges(edges)));

        int i = n - 3;
        while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
        if (i < 0) break;
        ++seq[i];
    }
    return classes;
}

// Counting-only second route: rooted trees by the divisor-sum
// recurrence, free trees by Otter's formula.
inline std::uint64_t otter_free_tree_count(int n) {
    std::vector<std::uint64_t> r(n + 1, 0);
    r[1] = 1;
    for (int m = 2; m <= n; ++m) {
        std::uint64_t acc = 0;
        for (int k = 1; k < m; ++k) {
            std::uint64_t s = 0;
            for (int d = 1; d <= k; ++d) {
                if (k % d == 0) s += static_cast<std::uint64_t>(d) * r[d];
            }
            acc += s * r[m - k];
        }
        r[m] = acc / (m - 1);
    }
    // t_n = r_n - (1/2) sum r_i r_{n-i} + (n even) r_{n/2}/2
    std::uint64_t pairs = 0;
    for (int i = 1; i < n; ++i) pairs += r[i] * r[n - i];
    std::uint64_t t2 = 2 * r[n] - pairs;
    if (n % 2 == 0) t2 += r[n / 2];
    return t2 / 2;
}

}  // namespace oracles
