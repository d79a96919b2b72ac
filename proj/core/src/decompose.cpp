#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "packtree/construct.hpp"
#include "packtree/solver.hpp"

namespace packtree {

namespace {

// One undone construction step, recorded in original vertex ids.
// `removed` lists the vertices the forward operation re-adds, in the
// operation's canonical new-vertex order.
struct PeelStep {
    OpKind kind;
    int anchor = -1;   // O1..O6
    int u = -1, v = -1;  // O7
    std::vector<int> removed;
};

struct BaseCase {
    SeedId which;
    std::vector<int> map;  // seed vertex -> original id
};

// Working tree during peeling: labelled by original ids, with an edge
// set that may differ from the input (O7 contraction reconnects u,v).
struct WorkTree {
    std::vector<int> verts;                    // sorted original ids
    std::vector<std::pair<int, int>> edges;    // original ids, u < v

    std::string key() const {
        std::string s;
        for (int v : verts) s += std::to_string(v) + ",";
        s += "|";
        for (auto [a, b] : edges) s += std::to_string(a) + "-" + std::to_string(b) + ",";
        return s;
    }
};

class Peeler {
public:
    Peeler(const Colouring& full) : full_(full) {}

    std::optional<BaseCase> run(const WorkTree& wt, std::vector<PeelStep>& steps) {
        auto [tree, local_col, to_local] = compress(wt);
        ColouredTree ct(tree, local_col);

        // Base case: exactly a seed, colours included (an equal-order
        // embedding is a coloured isomorphism).
        for (SeedId which : {SeedId::F1, SeedId::F2, SeedId::F3}) {
            if (seed(which).order() != ct.order()) continue;
            if (auto map = embed_seed(which, ct)) {
                BaseCase base{which, {}};
                base.map.reserve(map->size());
                for (int local : *map) base.map.push_back(wt.verts[local]);
                return base;
            }
        }

        std::string k = wt.key();
        if (failed_.count(k)) return std::nullopt;

        for (const PeelStep& cand : candidates(wt)) {
            WorkTree next = remove_step(wt, cand);
            if (!peel_target_ok(next, cand)) continue;
            steps.push_back(cand);
            if (auto base = run(next, steps)) return base;
            steps.pop_back();
        }
        failed_.insert(k);
        return std::nullopt;
    }

private:
    const Colouring& full_;
    std::set<std::string> failed_;

    int col(int orig) const { return full_[orig]; }

    std::tuple<Tree, Colouring, std::map<int, int>> compress(const WorkTree& wt) const {
        std::map<int, int> to_local;
        for (std::size_t i = 0; i < wt.verts.size(); ++i) to_local[wt.verts[i]] = static_cast<int>(i);
        std::vector<std::pair<int, int>> edges;
        edges.reserve(wt.edges.size());
        for (auto [a, b] : wt.edges) edges.emplace_back(to_local.at(a), to_local.at(b));
        std::vector<int> colours(wt.verts.size());
        for (std::size_t i = 0; i < wt.verts.size(); ++i) colours[i] = col(wt.verts[i]);
        return {Tree::from_edges(edges), Colouring(3, colours), to_local};
    }

    // Candidate inverse moves, by (kind, ids).
    std::vector<PeelStep> candidates(const WorkTree& wt) const {
        std::map<int, std::vector<int>> adj;
        for (int v : wt.verts) adj[v];
        for (auto [a, b] : wt.edges) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
        for (auto& [v, nb] : adj) std::sort(nb.begin(), nb.end());

        auto deg = [&](int v) { return static_cast<int>(adj.at(v).size()); };
        auto leaf = [&](int v) { return deg(v) == 1; };

        std::vector<PeelStep> out;
        // O1..O4 inverses: peel a leaf.
        for (int x : wt.verts) {
            if (!leaf(x)) continue;
            int u = adj.at(x)[0];
            if (col(x) == 1 && col(u) == 2) out.push_back({OpKind::O1, u, -1, -1, {x}});
        }
        for (int x : wt.verts) {
            if (!leaf(x)) continue;
            int u = adj.at(x)[0];
            if (col(x) == 1 && col(u) == 3) out.push_back({OpKind::O2, u, -1, -1, {x}});
        }
        for (int x : wt.verts) {
            if (!leaf(x)) continue;
            int u = adj.at(x)[0];
            if (col(x) == 2 && col(u) == 1) out.push_back({OpKind::O3, u, -1, -1, {x}});
        }
        for (int x : wt.verts) {
            if (!leaf(x)) continue;
            int u = adj.at(x)[0];
            if (col(x) == 3 && col(u) == 1) out.push_back({OpKind::O4, u, -1, -1, {x}});
        }
        // O5 inverse: pendant path u(3)-v1(1)-v2(2)-v3(1).
        for (int v3 : wt.verts) {
            if (!leaf(v3) || col(v3) != 1) continue;
            int v2 = adj.at(v3)[0];
            if (col(v2) != 2 || deg(v2) != 2) continue;
            int v1 = adj.at(v2)[0] == v3 ? adj.at(v2)[1] : adj.at(v2)[0];
            if (col(v1) != 1 || deg(v1) != 2) continue;
            int u = adj.at(v1)[0] == v2 ? adj.at(v1)[1] : adj.at(v1)[0];
            if (col(u) != 3) continue;
            out.push_back({OpKind::O5, u, -1, -1, {v1, v2, v3}});
        }
        // O6 inverse: 2-vertex v2 of degree 3 on a 3-vertex, with two
        // 1-leaves.
        for (int v2 : wt.verts) {
            if (col(v2) != 2 || deg(v2) != 3) continue;
            std::vector<int> ones;
            int u = -1;
            for (int w : adj.at(v2)) {
                if (col(w) == 1 && leaf(w)) {
                    ones.push_back(w);
                } else if (col(w) == 3) {
                    u = w;
                }
            }
            if (ones.size() == 2 && u >= 0) {
                out.push_back({OpKind::O6, u, -1, -1, {ones[0], v2, ones[1]}});
            }
        }
        // O7 inverse: contract u(3,deg2)-w1(1)-w2(2)-w3(1)-w4(3)-v(1),
        // all w_i of degree 2, back to the edge uv.
        for (int u : wt.verts) {
            if (col(u) != 3 || deg(u) != 2) continue;
            for (int w1 : adj.at(u)) {
                if (col(w1) != 1 || deg(w1) != 2) continue;
                int w2 = adj.at(w1)[0] == u ? adj.at(w1)[1] : adj.at(w1)[0];
                if (col(w2) != 2 || deg(w2) != 2) continue;
                int w3 = adj.at(w2)[0] == w1 ? adj.at(w2)[1] : adj.at(w2)[0];
                if (col(w3) != 1 || deg(w3) != 2) continue;
                int w4 = adj.at(w3)[0] == w2 ? adj.at(w3)[1] : adj.at(w3)[0];
                if (col(w4) != 3 || deg(w4) != 2) continue;
                int v = adj.at(w4)[0] == w3 ? adj.at(w4)[1] : adj.at(w4)[0];
                if (col(v) != 1) continue;
                PeelStep s{OpKind::O7, -1, u, v, {w1, w2, w3, w4}};
                out.push_back(s);
            }
        }
        std::sort(out.begin(), out.end(), [](const PeelStep& a, const PeelStep& b) {
            return std::tie(a.kind, a.anchor, a.u, a.v, a.removed) <
                   std::tie(b.kind, b.anchor, b.u, b.v, b.removed);
        });
        return out;
    }

    static WorkTree remove_step(const WorkTree& wt, const PeelStep& s) {
        WorkTree next;
        std::set<int> gone(s.removed.begin(), s.removed.end());
        for (int v : wt.verts) {
            if (!gone.count(v)) next.verts.push_back(v);
        }
        for (auto [a, b] : wt.edges) {
            if (!gone.count(a) && !gone.count(b)) next.edges.emplace_back(a, b);
        }
        if (s.kind == OpKind::O7) {
            next.edges.emplace_back(std::min(s.u, s.v), std::max(s.u, s.v));
            std::sort(next.edges.begin(), next.edges.end());
        }
        return next;
    }

    // The peeled-to tree must itself be uniquely 3-packable and the
    // forward operation must be applicable to it; otherwise the
    // certificate prefix would be unsound.
    bool peel_target_ok(const WorkTree& wt, const PeelStep& s) {
        auto [tree, local_col, to_local] = compress(wt);
        auto rep = verify_packing(tree, local_col);
        if (!rep.valid) return false;

        ColouredTree ct(tree, local_col);
        Operation op{s.kind};
        if (s.kind == OpKind::O7) {
            op.u = to_local.at(s.u);
            op.v = to_local.at(s.v);
        } else {
            op.anchor = to_local.at(s.anchor);
        }
        bool applicable = false;
        for (const Operation& a : applicable_operations(ct)) {
            if (a == op) {
                applicable = true;
                break;
            }
        }
        if (!applicable) return false;

        auto sols = enumerate_k_packings(tree, 3, 2);
        if (sols.size() != 1) return false;
        Profile p = colour_profile(sols[0]);
        if (p.sizes[2] == 0) return false;  // chi_rho <= 2, not uniquely 3
        return sols[0] == local_col;
    }
};

}  // namespace

std::optional<Certificate> decompose(const Tree& t) {
    UniquenessVerdict verdict = is_uniquely_k_packable(t, 3);
    if (verdict.kind != Uniqueness::Unique) return std::nullopt;
    const Colouring& c = verdict.colourings[0];

    WorkTree root;
    root.verts.resize(t.order());
    for (int v = 0; v < t.order(); ++v) root.verts[v] = v;
    root.edges = t.edge_list();

    Peeler peeler(c);
    std::vector<PeelStep> steps;
    auto base = peeler.run(root, steps);
    if (!base) {
        throw DecompositionFailed(
            "input is uniquely 3-packable but no peel sequence reached a seed");
    }

    // Assemble the certificate: replay ids are assigned seed-first,
    // then per step in reverse peel order; relabel sends them back to
    // the original ids.
    Certificate cert;
    cert.seed = base->which;
    std::map<int, int> orig2replay;
    for (std::size_t s = 0; s < base->map.size(); ++s) {
        orig2replay[base->map[s]] = static_cast<int>(s);
    }
    int next_replay = static_cast<int>(base->map.size());
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        Operation op{it->kind};
        if (it->kind == OpKind::O7) {
            op.u = orig2replay.at(it->u);
            op.v = orig2replay.at(it->v);
        } else {
            op.anchor = orig2replay.at(it->anchor);
        }
        cert.ops.push_back(op);
        for (int orig : it->removed) orig2replay[orig] = next_replay++;
    }
    cert.relabel.assign(t.order(), -1);
    for (auto [orig, replay] : orig2replay) cert.relabel[replay] = orig;
    return cert;
}

}  // namespace packtree
