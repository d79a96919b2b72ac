#pragma once

#include <utility>
#include <vector>

#include "packtree/errors.hpp"

namespace packtree {

/// Immutable labelled tree on vertices 0..n-1 with precomputed all-pairs
/// hop distances (n breadth-first traversals, O(n^2) memory).
class Tree {
public:
    /// Builds a tree from an edge list. Vertex ids must be exactly
    /// 0..n-1 where n = max id + 1; an empty edge list yields the
    /// single-vertex tree. Throws NotATree on cycles, disconnection,
    /// duplicate edges or self-loops; BadVertexId on negative ids.
    static Tree from_edges(const std::vector<std::pair<int, int>>& edges);

    static Tree single_vertex() { return from_edges({}); }

    int order() const { return n_; }
    const std::vector<int>& neighbours(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    int distance(int u, int v) const { return dist_[u][v]; }
    const std::vector<int>& distances_from(int v) const { return dist_[v]; }
    bool adjacent(int u, int v) const { return dist_[u][v] == 1; }

    /// Edges as (u,v) with u < v, sorted.
    std::vector<std::pair<int, int>> edge_list() const;

    int eccentricity(int v) const;
    int diameter() const;

    /// Smallest-id centroid (vertex minimizing the maximum component
    /// size after its removal).
    int centroid() const;

    /// Vertices in breadth-first order from root; neighbours visited in
    /// ascending id order.
    std::vector<int> bfs_order(int root) const;

    bool operator==(const Tree& o) const { return adj_ == o.adj_; }

private:
    Tree() = default;
    int n_ = 0;
    std::vector<std::vector<int>> adj_;   // sorted neighbour lists
    std::vector<std::vector<int>> dist_;  // symmetric, dist_[v][v] = 0
};

}  // namespace packtree
