#include "packtree/solver.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "packtree/packing_bound.hpp"

namespace packtree {

namespace {

// Backtracking over vertices in BFS order from a centroid, colours
// ascending. Visitor returns false to stop the whole search.
struct Search {
    const Tree& t;
    int k;
    std::vector<int> order;
    std::vector<int> colour;       // 0 = unassigned, indexed by vertex
    std::uint64_t nodes = 0;
    std::function<bool(const std::vector<int>&)> emit;

    Search(const Tree& t_, int k_) : t(t_), k(k_) {
        order = t.bfs_order(t.centroid());
        colour.assign(t.order(), 0);
    }

    bool conflicts(int v, int c) const {
        const auto& dv = t.distances_from(v);
        for (int u = 0; u < t.order(); ++u) {
            if (colour[u] == c && u != v && dv[u] <= c) return true;
        }
        return false;
    }

    bool run(std::size_t idx) {
        if (idx == order.size()) return emit(colour);
        int v = order[idx];
        for (int c = 1; c <= k; ++c) {
            if (c == 1 && t.degree(v) >= k) continue;  // no 1-vertex of degree >= k
            ++nodes;
            if (conflicts(v, c)) continue;
            colour[v] = c;
            bool go_on = run(idx + 1);
            colour[v] = 0;
            if (!go_on) return false;
        }
        return true;
    }
};

}  // namespace

bool packing_count_bound_feasible(const Tree& t, int k) {
    if (k < 1) throw BadParameter("k must be >= 1");
    long long total = 0;
    for (int i = 1; i <= k; ++i) total += max_i_packing(t, i);
    return total >= t.order();
}

std::vector<Colouring> enumerate_k_packings(const Tree& t, int k,
                                            std::optional<std::uint64_t> cap) {
    if (k < 1) throw BadParameter("k must be >= 1");
    std::vector<Colouring> out;
    if (cap && *cap == 0) return out;
    if (!packing_count_bound_feasible(t, k)) return out;
    Search s(t, k);
    s.emit = [&](const std::vector<int>& colour) {
        out.emplace_back(k, colour);
        return !cap || out.size() < *cap;
    };
    s.run(0);
    std::sort(out.begin(), out.end(),
              [](const Colouring& a, const Colouring& b) {
                  return a.colours < b.colours;
              });
    return out;
}

std::uint64_t count_k_packings(const Tree& t, int k,
                               std::optional<std::uint64_t> cap) {
    if (k < 1) throw BadParameter("k must be >= 1");
    if (cap && *cap == 0) return 0;
    if (!packing_count_bound_feasible(t, k)) return 0;
    std::uint64_t count = 0;
    Search s(t, k);
    s.emit = [&](const std::vector<int>&) {
        ++count;
        return !cap || count < *cap;
    };
    s.run(0);
    return count;
}

SolveResult chromatic_packing_number(const Tree& t, std::optional<int> k_limit) {
    auto start = std::chrono::steady_clock::now();
    SolveResult res;
    for (int k = 1;; ++k) {
        if (k_limit && k > *k_limit) {
            throw LimitExceeded("no packing colouring with k <= " +
                                std::to_string(*k_limit));
        }
        if (!packing_count_bound_feasible(t, k)) continue;
        Search s(t, k);
        std::optional<Colouring> found;
        s.emit = [&](const std::vector<int>& colour) {
            found = Colouring(k, colour);
            return false;
        };
        s.run(0);
        res.nodes_explored += s.nodes;
        if (found) {
            res.chi_rho = k;
            res.witness = std::move(*found);
            break;
        }
    }
    res.elapsed = std::chrono::steady_clock::now() - start;
    return res;
}

UniquenessVerdict is_uniquely_k_packable(const Tree& t, int k) {
    if (k < 1) throw BadParameter("k must be >= 1");
    UniquenessVerdict v;
    SolveResult opt = chromatic_packing_number(t);
    if (opt.chi_rho != k) {
        v.kind = Uniqueness::WrongK;
        v.true_chi_rho = opt.chi_rho;
        return v;
    }
    auto sols = enumerate_k_packings(t, k, 2);
    if (sols.size() == 1) {
        v.kind = Uniqueness::Unique;
        v.colourings = std::move(sols);
    } else {
        v.kind = Uniqueness::Multiple;
        v.colourings = std::move(sols);
    }
    return v;
}

}  // namespace packtree
