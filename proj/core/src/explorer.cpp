#include <algorithm>
#include <chrono>
#include <functional>
#include <set>
#include <string>

#include "packtree/explorer.hpp"
#include "packtree/packing_bound.hpp"

namespace packtree {

namespace {

using Clock = std::chrono::steady_clock;

bool bound_ok(int n, int chi) {
    // chi_rho <= (n+7)/4, with a +1/4 allowance when n is 4 or 8.
    return 4 * chi <= n + 7 + ((n == 4 || n == 8) ? 1 : 0);
}

}  // namespace

ScanReport scan(int n_max, int k_max, std::optional<double> budget_secs) {
    if (n_max < 1 || k_max < 1) throw BadParameter("scan needs n_max, k_max >= 1");
    ScanReport rep;
    rep.n_max = n_max;
    rep.k_max = k_max;
    rep.trees_per_order.assign(n_max + 1, 0);

    auto deadline = budget_secs
                        ? std::optional<Clock::time_point>(
                              Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                                 std::chrono::duration<double>(*budget_secs)))
                        : std::nullopt;

    for (int n = 1; n <= n_max; ++n) {
        auto trees = gen_trees(n);
        rep.trees_per_order[n] = trees.size();
        for (std::size_t idx = 0; idx < trees.size(); ++idx) {
            if (deadline && Clock::now() > *deadline) {
                rep.budget_exceeded = true;
                return rep;
            }
            const Tree& t = trees[idx];
            int chi;
            try {
                chi = chromatic_packing_number(t, k_max).chi_rho;
            } catch (const LimitExceeded&) {
                rep.bound_violations.push_back({n, static_cast<int>(idx), k_max + 1});
                continue;
            }
            if (!rep.min_order_for_chi.count(chi)) rep.min_order_for_chi[chi] = n;
            if (!bound_ok(n, chi)) {
                rep.bound_violations.push_back({n, static_cast<int>(idx), chi});
            }
            if (chi == 3 && count_k_packings(t, 3, 2) == 1) {
                ++rep.unique3_count;
                rep.unique3_ids.emplace_back(n, static_cast<int>(idx));
            }
        }
    }
    return rep;
}

namespace {

// Attach per-hub pendant leaves to a skeleton; recurse over hubs.
void expand_hubs(const Tree& skeleton, const std::vector<int>& hubs,
                 std::size_t hub_idx, int lo, int hi, int max_order,
                 std::vector<int>& counts,
                 const std::function<void(const Tree&)>& sink) {
    if (hub_idx == hubs.size()) {
        int extra = 0;
        for (int c : counts) extra += c;
        if (skeleton.order() + extra > max_order) return;
        auto edges = skeleton.edge_list();
        int next = skeleton.order();
        for (std::size_t h = 0; h < hubs.size(); ++h) {
            for (int i = 0; i < counts[h]; ++i) edges.emplace_back(hubs[h], next++);
        }
        sink(Tree::from_edges(edges));
        return;
    }
    for (int c = lo; c <= hi; ++c) {
        counts[hub_idx] = c;
        expand_hubs(skeleton, hubs, hub_idx + 1, lo, hi, max_order, counts, sink);
    }
}

}  // namespace

SearchResult search_uniquely_k(const SearchSpec& spec) {
    if (spec.k < 3) throw BadParameter("search requires k >= 3");
    if (spec.max_order < 1 || spec.time_budget_secs <= 0) {
        throw BadParameter("budgets must be positive");
    }
    SearchResult res;
    auto deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                       std::chrono::duration<double>(spec.time_budget_secs));

    auto consider = [&](const Tree& t) -> bool {
        if (Clock::now() > deadline) {
            res.budget_exceeded = true;
            return false;
        }
        ++res.trees_examined;
        UniquenessVerdict v = is_uniquely_k_packable(t, spec.k);
        if (v.kind == Uniqueness::Unique) {
            res.findings.push_back({t, v.colourings[0]});
            if (spec.max_findings && res.findings.size() >= spec.max_findings) {
                return false;
            }
        }
        return true;
    };

    if (!spec.hub_template) {
        for (int n = std::max(1, spec.min_order); n <= spec.max_order; ++n) {
            for (const Tree& t : gen_trees(n)) {
                if (!consider(t)) return res;
            }
        }
        return res;
    }

    // Template mode: skeletons with chosen hub subsets, each hub
    // forced to degree >= k by pendant leaves.
    const int lo = spec.k - 1;
    const int hi = std::min(spec.max_hub_leaves, spec.k + 1);
    std::set<std::string> seen;
    bool stop = false;
    for (int b = 1; b <= spec.max_skeleton_order && !stop; ++b) {
        for (const Tree& skel : gen_trees(b)) {
            if (stop) break;
            for (unsigned mask = 1; mask < (1u << b) && !stop; ++mask) {
                std::vector<int> hubs;
                for (int v = 0; v < b; ++v) {
                    if (mask & (1u << v)) hubs.push_back(v);
                }
                std::vector<int> counts(hubs.size(), lo);
                expand_hubs(skel, hubs, 0, lo, hi, spec.max_order, counts,
                            [&](const Tree& t) {
                                if (stop || t.order() < spec.min_order) return;
                                if (!seen.insert(canonical_form(t)).second) return;
                                if (!consider(t)) stop = true;
                            });
            }
        }
    }
    return res;
}

}  // namespace packtree
