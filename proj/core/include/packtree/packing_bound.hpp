#pragma once

#include "packtree/tree.hpp"

namespace packtree {

/// Maximum cardinality of a vertex set with pairwise distance > i,
/// computed exactly by dynamic programming over the rooted tree
/// (state: distance to the closest selected vertex in the subtree,
/// capped at i+1).
int max_i_packing(const Tree& t, int i);

}  // namespace packtree
