#pragma once

#include <optional>
#include <string>
#include <vector>

#include "packtree/colouring.hpp"
#include "packtree/tree.hpp"

namespace packtree {

enum class SeedId { F1, F2, F3 };

enum class OpKind { O1, O2, O3, O4, O5, O6, O7 };

std::string to_string(SeedId s);
std::string to_string(OpKind k);
SeedId seed_from_string(const std::string& s);
OpKind op_kind_from_string(const std::string& s);

/// One construction step. O1..O4 attach a vertex at `anchor`; O5/O6
/// attach a three-vertex arm at 3-vertex `anchor`; O7 replaces the edge
/// (u,v) by a five-edge path.
struct Operation {
    OpKind kind;
    int anchor = -1;  // O1..O6
    int u = -1, v = -1;  // O7

    bool operator==(const Operation& o) const = default;
};

/// A tree together with a 3-packing. Instances produced by seed(),
/// apply_operation(), replay_certificate() or the family generators are
/// marked certified: they are uniquely 3-packable by construction, and
/// only certified instances may be extended further.
class ColouredTree {
public:
    ColouredTree(Tree t, Colouring c);

    const Tree& tree() const { return tree_; }
    const Colouring& colouring() const { return col_; }
    int order() const { return tree_.order(); }
    int colour_of(int v) const { return col_[v]; }
    bool certified() const { return certified_; }

private:
    friend ColouredTree make_certified(Tree t, Colouring c);
    Tree tree_;
    Colouring col_;
    bool certified_ = false;
};

/// Seed plus ordered operation list; replays to a uniquely
/// 3-packable coloured tree. `relabel`, when non-empty, renames replay
/// vertex r to relabel[r] after the final step, so certificates can
/// reproduce an externally labelled tree exactly.
struct Certificate {
    SeedId seed;
    std::vector<Operation> ops;
    std::vector<int> relabel;  // empty = identity

    bool operator==(const Certificate& o) const = default;
};

ColouredTree seed(SeedId which);

/// Applies one operation, enforcing its precondition and that ct is
/// certified. New vertices take the next free ids, arm/path vertices in
/// the order the operation defines them.
ColouredTree apply_operation(const ColouredTree& ct, const Operation& op);

/// All operations whose preconditions hold on ct, ordered by
/// (kind, anchors).
std::vector<Operation> applicable_operations(const ColouredTree& ct);

ColouredTree replay_certificate(const Certificate& cert);

struct SeedEmbedding {
    SeedId which;
    std::vector<int> map;  // seed vertex -> ct vertex
};

/// Colour-preserving subtree embedding of one specific seed into ct;
/// map[s] is the ct vertex carrying seed vertex s.
std::optional<std::vector<int>> embed_seed(SeedId which, const ColouredTree& ct);

/// Colour-preserving subtree embedding of F1, F2 or F3 into ct,
/// preferring F1 then F2 then F3; nullopt if no seed embeds.
std::optional<SeedEmbedding> find_F_subtree(const ColouredTree& ct);

/// Recognizer for seed-plus-operations constructibility: returns a
/// certificate whose replay reproduces t exactly (labels included) when
/// t is uniquely 3-packable, nullopt otherwise. Throws
/// DecompositionFailed only on an internal gap, never as a verdict.
std::optional<Certificate> decompose(const Tree& t);

}  // namespace packtree
