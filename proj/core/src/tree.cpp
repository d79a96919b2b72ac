#include "packtree/tree.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace packtree {

Tree Tree::from_edges(const std::vector<std::pair<int, int>>& edges) {
    int n = 1;
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0) {
            throw BadVertexId("negative vertex id");
        }
        n = std::max({n, u + 1, v + 1});
    }
    if (!edges.empty() && static_cast<int>(edges.size()) != n - 1) {
        throw NotATree("tree on " + std::to_string(n) + " vertices needs " +
                       std::to_string(n - 1) + " edges, got " +
                       std::to_string(edges.size()));
    }

    Tree t;
    t.n_ = n;
    t.adj_.assign(n, {});
    for (auto [u, v] : edges) {
        if (u == v) throw NotATree("self-loop at " + std::to_string(u));
        t.adj_[u].push_back(v);
        t.adj_[v].push_back(u);
    }
    for (auto& nb : t.adj_) {
        std::sort(nb.begin(), nb.end());
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) {
            throw NotATree("duplicate edge");
        }
    }

    // BFS from every vertex; the first one doubles as the
    // connectivity check (edge count is already n-1, so connected
    // implies acyclic).
    t.dist_.assign(n, std::vector<int>(n, -1));
    for (int s = 0; s < n; ++s) {
        auto& d = t.dist_[s];
        d[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : t.adj_[u]) {
                if (d[w] < 0) {
                    d[w] = d[u] + 1;
                    q.push(w);
                }
            }
        }
        if (s == 0) {
            for (int v = 0; v < n; ++v) {
                if (d[v] < 0) {
                    throw NotATree("disconnected: vertex " + std::to_string(v) +
                                   " unreachable from 0");
                }
            }
        }
    }
    return t;
}

std::vector<std::pair<int, int>> Tree::edge_list() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(n_ - 1);
    for (int u = 0; u < n_; ++u) {
        for (int v : adj_[u]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

int Tree::eccentricity(int v) const {
    return *std::max_element(dist_[v].begin(), dist_[v].end());
}

int Tree::diameter() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, eccentricity(v));
    return d;
}

int Tree::centroid() const {
    // Component sizes after removing v, via one rooted pass.
    std::vector<int> sub(n_, 1);
    std::vector<int> order = bfs_order(0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        for (int w : adj_[v]) {
            if (dist_[0][w] > dist_[0][v]) sub[v] += sub[w];
        }
    }
    int best = 0, best_val = n_;
    for (int v = 0; v < n_; ++v) {
        int worst = n_ - sub[v];  // the component containing the root
        for (int w : adj_[v]) {
            if (dist_[0][w] > dist_[0][v]) worst = std::max(worst, sub[w]);
        }
        if (worst < best_val) {
            best_val = worst;
            best = v;
        }
    }
    return best;
}

std::vector<int> Tree::bfs_order(int root) const {
    std::vector<int> order;
    order.reserve(n_);
    std::vector<char> seen(n_, 0);
    std::queue<int> q;
    q.push(root);
    seen[root] = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        order.push_back(u);
        for (int w : adj_[u]) {
            if (!seen[w]) {
                seen[w] = 1;
                q.push(w);
            }
        }
    }
    return order;
}

}  // namespace packtree
