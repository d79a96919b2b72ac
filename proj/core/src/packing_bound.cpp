#include "packtree/packing_bound.hpp"

#include <algorithm>
#include <vector>

namespace packtree {

namespace {
constexpr int kNegInf = -1'000'000;
}

int max_i_packing(const Tree& t, int i) {
    if (i < 1) throw BadParameter("i must be >= 1");
    const int n = t.order();
    const int far = i + 1;  // state `far` also covers "nothing selected"

    // dp[v][d]: best count in subtree(v) with the selected vertex closest
    // to v at distance exactly d (d = far: distance >= i+1 or empty).
    std::vector<std::vector<int>> dp(n);
    std::vector<int> order = t.bfs_order(0);
    std::vector<int> depth(n);
    for (int v : order) depth[v] = t.distance(0, v);

    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        // Merge children left to right; cur[d] over the already-merged
        // children, distances measured from v.
        std::vector<int> cur(far + 1, kNegInf);
        cur[far] = 0;
        for (int w : t.neighbours(v)) {
            if (depth[w] <= depth[v]) continue;
            const auto& child = dp[w];
            std::vector<int> next(far + 1, kNegInf);
            for (int d = 0; d <= far; ++d) {
                if (cur[d] == kNegInf) continue;
                for (int e = 0; e <= far; ++e) {
                    if (child[e] == kNegInf) continue;
                    int ev = std::min(e + 1, far);  // distance from v
                    // Cross pairs between merged groups meet at v;
                    // `far` means >= i+1, so any pairing with it is fine.
                    if (d != far && ev != far && d + ev <= i) continue;
                    int nd = std::min(d, ev);
                    next[nd] = std::max(next[nd], cur[d] + child[e]);
                }
            }
            cur = std::move(next);
        }
        auto& me = dp[v];
        me = cur;  // v not selected
        if (cur[far] != kNegInf) {
            me[0] = std::max(me[0], cur[far] + 1);  // select v
        }
    }
    return *std::max_element(dp[order[0]].begin(), dp[order[0]].end());
}

}  // namespace packtree
