#include <algorithm>
#include <map>
#include <string>

#include "packtree/explorer.hpp"

namespace packtree {

namespace {

std::string canon_rooted(const Tree& t, int v, int parent) {
    std::vector<std::string> kids;
    for (int w : t.neighbours(v)) {
        if (w != parent) kids.push_back(canon_rooted(t, w, v));
    }
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (const auto& k : kids) s += k;
    s += ")";
    return s;
}

// One centroid, or the two endpoints of the centre edge.
std::vector<int> centroids(const Tree& t) {
    const int n = t.order();
    std::vector<int> out;
    for (int v = 0; v < n; ++v) {
        // Max component size after removing v.
        int worst = 0;
        for (int w : t.neighbours(v)) {
            int cnt = 0;
            for (int x = 0; x < n; ++x) {
                if (x != v && t.distance(x, w) < t.distance(x, v)) ++cnt;
            }
            worst = std::max(worst, cnt);
        }
        if (2 * worst <= n) out.push_back(v);
    }
    return out;
}

Tree tree_from_levels(const std::vector<int>& levels) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 1; i < levels.size(); ++i) {
        for (std::size_t j = i; j-- > 0;) {
            if (levels[j] == levels[i] - 1) {
                edges.emplace_back(static_cast<int>(j), static_cast<int>(i));
                break;
            }
        }
    }
    return Tree::from_edges(edges);
}

}  // namespace

std::string canonical_form(const Tree& t) {
    auto cs = centroids(t);
    if (cs.size() == 1) {
        return "U" + canon_rooted(t, cs[0], -1);
    }
    std::string a = canon_rooted(t, cs[0], cs[1]);
    std::string b = canon_rooted(t, cs[1], cs[0]);
    if (b < a) std::swap(a, b);
    return "B" + a + b;
}

std::vector<Tree> gen_trees(int n) {
    if (n < 1) throw BadParameter("order must be >= 1");
    if (n > 16) throw OrderTooLarge("gen_trees supports n <= 16");
    if (n == 1) return {Tree::single_vertex()};

    // Beyer-Hedetniemi successor generation of rooted level sequences,
    // deduplicated into free trees by canonical form.
    std::map<std::string, Tree> classes;
    std::vector<int> L(n);
    for (int i = 0; i < n; ++i) L[i] = i + 1;
    while (true) {
        Tree t = tree_from_levels(L);
        classes.emplace(canonical_form(t), t);

        int p = -1;
        for (int i = n - 1; i >= 0; --i) {
            if (L[i] > 2) {
                p = i;
                break;
            }
        }
        if (p < 0) break;
        int q = -1;
        for (int i = p - 1; i >= 0; --i) {
            if (L[i] == L[p] - 1) {
                q = i;
                break;
            }
        }
        for (int i = p; i < n; ++i) L[i] = L[i - (p - q)];
    }

    std::vector<Tree> out;
    out.reserve(classes.size());
    for (auto& [form, tree] : classes) out.push_back(std::move(tree));
    return out;
}

}  // namespace packtree
