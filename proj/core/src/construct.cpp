#include "packtree/construct.hpp"

#include <algorithm>
#include <cassert>

#include "certify.hpp"

namespace packtree {

std::string to_string(SeedId s) {
    switch (s) {
        case SeedId::F1: return "F1";
        case SeedId::F2: return "F2";
        case SeedId::F3: return "F3";
    }
    return "?";
}

std::string to_string(OpKind k) {
    return "O" + std::to_string(static_cast<int>(k) + 1);
}

SeedId seed_from_string(const std::string& s) {
    if (s == "F1") return SeedId::F1;
    if (s == "F2") return SeedId::F2;
    if (s == "F3") return SeedId::F3;
    throw BadParameter("unknown seed '" + s + "'");
}

OpKind op_kind_from_string(const std::string& s) {
    for (int i = 0; i < 7; ++i) {
        if (s == "O" + std::to_string(i + 1)) return static_cast<OpKind>(i);
    }
    throw BadParameter("unknown operation kind '" + s + "'");
}

ColouredTree::ColouredTree(Tree t, Colouring c)
    : tree_(std::move(t)), col_(std::move(c)) {
    if (col_.order() != tree_.order()) {
        throw SizeMismatch("colouring/tree order mismatch");
    }
    auto rep = verify_packing(tree_, col_);
    if (!rep.valid) {
        throw BadParameter("colouring is not a valid packing");
    }
}

ColouredTree make_certified(Tree t, Colouring c) {
    ColouredTree ct(std::move(t), std::move(c));
    ct.certified_ = true;
    return ct;
}

ColouredTree seed(SeedId which) {
    std::vector<std::pair<int, int>> edges;
    std::vector<int> colours;
    switch (which) {
        case SeedId::F1:
            // spine y(2)-x(1)-v(3)-u(2); leaves 4,5 on u; leaf 6 on v
            edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {2, 6}};
            colours = {2, 1, 3, 2, 1, 1, 1};
            break;
        case SeedId::F2:
            // spine 3-1-y(2)-x(1)-v(3)-u(2); leaves 6,7 on u; leaf z=8 on y
            edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {5, 7}, {2, 8}};
            colours = {3, 1, 2, 1, 3, 2, 1, 1, 1};
            break;
        case SeedId::F3:
            // spine u(2)-v(3)-x(1)-y(2)-4(1)-5(3); leaves 6,7 on u;
            // two 1-2-1 arms hanging off vertex 5
            edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 6}, {0, 7},
                     {5, 8}, {8, 9}, {9, 10}, {5, 11}, {11, 12}, {12, 13}};
            colours = {2, 3, 1, 2, 1, 3, 1, 1, 1, 2, 1, 1, 2, 1};
            break;
    }
    return make_certified(Tree::from_edges(edges), Colouring(3, colours));
}

namespace {

bool has_neighbour_of_colour(const ColouredTree& ct, int v, int colour) {
    for (int w : ct.tree().neighbours(v)) {
        if (ct.colour_of(w) == colour) return true;
    }
    return false;
}

int min_dist_to_colour(const ColouredTree& ct, int v, int colour) {
    int best = ct.order();  // > any distance
    for (int w = 0; w < ct.order(); ++w) {
        if (w != v && ct.colour_of(w) == colour) {
            best = std::min(best, ct.tree().distance(v, w));
        }
    }
    return best;
}

void check_anchor(const ColouredTree& ct, const Operation& op) {
    if (op.anchor < 0 || op.anchor >= ct.order()) {
        throw PreconditionViolated(to_string(op.kind), "anchor out of range");
    }
}

// Throws PreconditionViolated unless op is applicable to ct.
void check_precondition(const ColouredTree& ct, const Operation& op) {
    const auto& t = ct.tree();
    switch (op.kind) {
        case OpKind::O1:
            check_anchor(ct, op);
            if (ct.colour_of(op.anchor) != 2) {
                throw PreconditionViolated("O1", "anchor is not a 2-vertex");
            }
            break;
        case OpKind::O2:
            check_anchor(ct, op);
            if (ct.colour_of(op.anchor) != 3) {
                throw PreconditionViolated("O2", "anchor is not a 3-vertex");
            }
            if (!has_neighbour_of_colour(ct, op.anchor, 2)) {
                throw PreconditionViolated("O2", "anchor has no 2-neighbour");
            }
            break;
        case OpKind::O3:
            check_anchor(ct, op);
            if (ct.colour_of(op.anchor) != 1) {
                throw PreconditionViolated("O3", "anchor is not a 1-vertex");
            }
            if (has_neighbour_of_colour(ct, op.anchor, 2)) {
                throw PreconditionViolated("O3", "anchor has a 2-neighbour");
            }
            break;
        case OpKind::O4:
            check_anchor(ct, op);
            if (ct.colour_of(op.anchor) != 1) {
                throw PreconditionViolated("O4", "anchor is not a 1-vertex");
            }
            if (min_dist_to_colour(ct, op.anchor, 3) < 3) {
                throw PreconditionViolated(
                    "O4", "anchor within distance 2 of a 3-vertex");
            }
            break;
        case OpKind::O5:
            check_anchor(ct, op);
            if (ct.colour_of(op.anchor) != 3) {
                throw PreconditionViolated("O5", "anchor is not a 3-vertex");
            }
            break;
        case OpKind::O6:
            check_anchor(ct, op);
            if (ct.colour_of(op.anchor) != 3) {
                throw PreconditionViolated("O6", "anchor is not a 3-vertex");
            }
            if (has_neighbour_of_colour(ct, op.anchor, 2)) {
                throw PreconditionViolated("O6", "anchor has a 2-neighbour");
            }
            break;
        case OpKind::O7:
            if (op.u < 0 || op.u >= ct.order() || op.v < 0 || op.v >= ct.order() ||
                !t.adjacent(op.u, op.v)) {
                throw PreconditionViolated("O7", "(u,v) is not an edge");
            }
            if (ct.colour_of(op.u) != 3) {
                throw PreconditionViolated("O7", "u is not a 3-vertex");
            }
            if (ct.colour_of(op.v) != 1) {
                throw PreconditionViolated("O7", "v is not a 1-vertex");
            }
            if (t.degree(op.u) != 2) {
                throw PreconditionViolated("O7", "deg(u) != 2");
            }
            break;
    }
}

}  // namespace

ColouredTree apply_operation(const ColouredTree& ct, const Operation& op) {
    if (!ct.certified()) {
        throw PreconditionViolated(to_string(op.kind),
                                   "input is not certificate-valid");
    }
    check_precondition(ct, op);

    auto edges = ct.tree().edge_list();
    std::vector<int> colours = ct.colouring().colours;
    int next = ct.order();

    switch (op.kind) {
        case OpKind::O1:
        case OpKind::O2:
            edges.emplace_back(op.anchor, next);
            colours.push_back(1);
            break;
        case OpKind::O3:
            edges.emplace_back(op.anchor, next);
            colours.push_back(2);
            break;
        case OpKind::O4:
            edges.emplace_back(op.anchor, next);
            colours.push_back(3);
            break;
        case OpKind::O5:
            // path v1,v2,v3 coloured 1,2,1; edge anchor-v1
            edges.emplace_back(op.anchor, next);
            edges.emplace_back(next, next + 1);
            edges.emplace_back(next + 1, next + 2);
            colours.insert(colours.end(), {1, 2, 1});
            break;
        case OpKind::O6:
            // path v1,v2,v3 coloured 1,2,1; edge anchor-v2
            edges.emplace_back(next, next + 1);
            edges.emplace_back(next + 1, next + 2);
            edges.emplace_back(op.anchor, next + 1);
            colours.insert(colours.end(), {1, 2, 1});
            break;
        case OpKind::O7: {
            // replace uv by u,w1,w2,w3,w4,v with w's coloured 1,2,1,3
            std::pair<int, int> uv{std::min(op.u, op.v), std::max(op.u, op.v)};
            auto is_uv = [&](const std::pair<int, int>& e) { return e == uv; };
            edges.erase(std::remove_if(edges.begin(), edges.end(), is_uv),
                        edges.end());
            edges.emplace_back(op.u, next);
            edges.emplace_back(next, next + 1);
            edges.emplace_back(next + 1, next + 2);
            edges.emplace_back(next + 2, next + 3);
            edges.emplace_back(next + 3, op.v);
            colours.insert(colours.end(), {1, 2, 1, 3});
            break;
        }
    }

    Tree t = Tree::from_edges(edges);
    Colouring c(3, std::move(colours));
    assert(verify_packing(t, c).valid);
    return make_certified(std::move(t), std::move(c));
}

std::vector<Operation> applicable_operations(const ColouredTree& ct) {
    std::vector<Operation> ops;
    auto try_push = [&](Operation op) {
        try {
            check_precondition(ct, op);
            ops.push_back(op);
        } catch (const PreconditionViolated&) {
        }
    };
    for (int kind = 0; kind < 6; ++kind) {
        for (int v = 0; v < ct.order(); ++v) {
            try_push({static_cast<OpKind>(kind), v});
        }
    }
    for (int u = 0; u < ct.order(); ++u) {
        for (int v : ct.tree().neighbours(u)) {
            Operation op{OpKind::O7};
            op.u = u;
            op.v = v;
            try_push(op);
        }
    }
    return ops;
}

ColouredTree replay_certificate(const Certificate& cert) {
    ColouredTree ct = seed(cert.seed);
    for (std::size_t i = 0; i < cert.ops.size(); ++i) {
        try {
            ct = apply_operation(ct, cert.ops[i]);
        } catch (const PreconditionViolated& e) {
            throw PreconditionViolated(e.kind_name, e.what(),
                                       static_cast<int>(i));
        }
    }
    if (cert.relabel.empty()) return ct;

    const int n = ct.order();
    if (static_cast<int>(cert.relabel.size()) != n) {
        throw BadParameter("relabel size != replayed order");
    }
    std::vector<char> seen(n, 0);
    for (int x : cert.relabel) {
        if (x < 0 || x >= n || seen[x]) throw BadParameter("relabel is not a permutation");
        seen[x] = 1;
    }
    std::vector<std::pair<int, int>> edges;
    for (auto [a, b] : ct.tree().edge_list()) {
        edges.emplace_back(cert.relabel[a], cert.relabel[b]);
    }
    std::vector<int> colours(n);
    for (int v = 0; v < n; ++v) colours[cert.relabel[v]] = ct.colour_of(v);
    return make_certified(Tree::from_edges(edges), Colouring(3, colours));
}

namespace {

bool extend_embedding(const ColouredTree& seed_ct, const ColouredTree& ct,
                      const std::vector<int>& seed_order, std::size_t idx,
                      std::vector<int>& map, std::vector<char>& used) {
    if (idx == seed_order.size()) return true;
    int s = seed_order[idx];
    // Some earlier seed vertex adjacent to s (exists: BFS order).
    int parent = -1;
    for (std::size_t j = 0; j < idx; ++j) {
        if (seed_ct.tree().adjacent(seed_order[j], s)) {
            parent = seed_order[j];
            break;
        }
    }
    for (int cand : ct.tree().neighbours(map[parent])) {
        if (used[cand] || ct.colour_of(cand) != seed_ct.colour_of(s)) continue;
        map[s] = cand;
        used[cand] = 1;
        if (extend_embedding(seed_ct, ct, seed_order, idx + 1, map, used)) {
            return true;
        }
        used[cand] = 0;
        map[s] = -1;
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> embed_seed(SeedId which, const ColouredTree& ct) {
    ColouredTree f = seed(which);
    if (f.order() > ct.order()) return std::nullopt;
    std::vector<int> seed_order = f.tree().bfs_order(0);
    std::vector<int> map(f.order(), -1);
    std::vector<char> used(ct.order(), 0);
    for (int root = 0; root < ct.order(); ++root) {
        if (ct.colour_of(root) != f.colour_of(0)) continue;
        map[0] = root;
        used[root] = 1;
        if (extend_embedding(f, ct, seed_order, 1, map, used)) {
            return map;
        }
        used[root] = 0;
        map[0] = -1;
    }
    return std::nullopt;
}

std::optional<SeedEmbedding> find_F_subtree(const ColouredTree& ct) {
    for (SeedId which : {SeedId::F1, SeedId::F2, SeedId::F3}) {
        if (auto map = embed_seed(which, ct)) {
            return SeedEmbedding{which, *map};
        }
    }
    return std::nullopt;
}

}  // namespace packtree
