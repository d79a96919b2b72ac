#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "packtree/solver.hpp"
#include "packtree/tree.hpp"

namespace packtree {

/// One representative per isomorphism class of trees of order n,
/// deterministically ordered by canonical form. Throws OrderTooLarge
/// for n > 16.
std::vector<Tree> gen_trees(int n);

/// Canonical encoding of the unlabelled tree (rooted-at-centroid
/// minimal level encoding; bicentroids handled by splitting the centre
/// edge).
std::string canonical_form(const Tree& t);

struct BoundViolation {
    int order;
    int index;  // position in gen_trees(order)
    int chi_rho;
};

struct ScanReport {
    int n_max = 0;
    int k_max = 0;
    std::vector<std::uint64_t> trees_per_order;  // [1..n_max], index 0 unused
    std::map<int, int> min_order_for_chi;        // chi_rho -> smallest order
    std::vector<BoundViolation> bound_violations;
    std::uint64_t unique3_count = 0;
    std::vector<std::pair<int, int>> unique3_ids;  // (order, index)
    bool budget_exceeded = false;
};

/// Exhaustive scan of all trees up to n_max: chi_rho (capped at k_max),
/// uniqueness at chi_rho, minima aggregation, and the (n+7)/4 upper
/// bound check (n in {4,8} gets the +1/4 allowance).
ScanReport scan(int n_max, int k_max, std::optional<double> budget_secs = {});

struct SearchSpec {
    int k = 4;
    int max_order = 15;
    int min_order = 1;
    /// Cap on per-hub leaf count in template mode; values are clamped
    /// to [k-1, k+1] (leaves beyond k-1 only grow the instance).
    int max_hub_leaves = 5;
    double time_budget_secs = 1800.0;
    /// When true, restrict candidates to skeleton trees with hub
    /// vertices carrying >= k-1 pendant leaves (so colour 1 is
    /// excluded there); when false, exhaust all trees by order.
    bool hub_template = false;
    int max_skeleton_order = 8;  // template mode only
    std::uint64_t max_findings = 0;  // 0 = unlimited
};

struct SearchFinding {
    Tree tree;
    Colouring colouring;  // the unique k-packing
};

struct SearchResult {
    std::vector<SearchFinding> findings;
    std::uint64_t trees_examined = 0;
    bool budget_exceeded = false;
};

/// Search for uniquely k-packable trees; every finding is verified by
/// full enumeration (cap 2).
SearchResult search_uniquely_k(const SearchSpec& spec);

}  // namespace packtree
