#include "packtree/families.hpp"

#include <string>

#include "certify.hpp"

namespace packtree {

namespace {

// Generator output and certificate replay are computed independently
// and compared; a mismatch is a bug in either recipe.
FamilyMember checked(Tree t, Colouring c, Certificate cert) {
    ColouredTree replayed = replay_certificate(cert);
    if (!(replayed.tree() == t) || !(replayed.colouring() == c)) {
        throw DecompositionFailed("family certificate does not replay to the generator output");
    }
    return {make_certified(std::move(t), std::move(c)), std::move(cert)};
}

}  // namespace

FamilyMember make_Tk(int k) {
    if (k < 2) throw BadParameter("T_k requires k >= 2");

    // u=0, v=1, x=2, y=3; u-leaves 4,5; v-leaves 6,7; y-arms (1,3).
    std::vector<std::pair<int, int>> edges = {{0, 1}, {1, 2}, {2, 3},
                                              {0, 4}, {0, 5}, {1, 6}, {1, 7}};
    std::vector<int> colours = {2, 3, 1, 2, 1, 1, 1, 1};
    for (int j = 0; j < k; ++j) {
        int inner = 8 + 2 * j, tip = 9 + 2 * j;
        edges.emplace_back(3, inner);
        edges.emplace_back(inner, tip);
        colours.push_back(1);
        colours.push_back(3);
    }

    // From F1 (0=y,1=x,2=v,3=u): one O2 at v, k times O1 at y, then O4
    // at each new y-leaf.
    Certificate cert;
    cert.seed = SeedId::F1;
    cert.ops.push_back({OpKind::O2, 2});
    for (int j = 0; j < k; ++j) cert.ops.push_back({OpKind::O1, 0});
    for (int j = 0; j < k; ++j) cert.ops.push_back({OpKind::O4, 8 + j});

    cert.relabel.assign(8 + 2 * k, -1);
    cert.relabel[0] = 3;  // y
    cert.relabel[1] = 2;  // x
    cert.relabel[2] = 1;  // v
    cert.relabel[3] = 0;  // u
    cert.relabel[4] = 4;
    cert.relabel[5] = 5;
    cert.relabel[6] = 6;
    cert.relabel[7] = 7;
    for (int j = 0; j < k; ++j) {
        cert.relabel[8 + j] = 8 + 2 * j;      // arm inner
        cert.relabel[8 + k + j] = 9 + 2 * j;  // arm tip
    }
    return checked(Tree::from_edges(edges), Colouring(3, std::move(colours)),
                   std::move(cert));
}

FamilyMember make_Tlk(int l, int k) {
    if (l < 2 || k < 2) throw BadParameter("T_{l,k} requires l,k >= 2");

    // u=0, v=1, x=2, y=3; u-leaves 4,5; l v-arms (1,2); k y-arms (1,3).
    std::vector<std::pair<int, int>> edges = {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {0, 5}};
    std::vector<int> colours = {2, 3, 1, 2, 1, 1};
    for (int j = 0; j < l; ++j) {
        int inner = 6 + 2 * j, tip = 7 + 2 * j;
        edges.emplace_back(1, inner);
        edges.emplace_back(inner, tip);
        colours.push_back(1);
        colours.push_back(2);
    }
    for (int j = 0; j < k; ++j) {
        int inner = 6 + 2 * l + 2 * j, tip = 7 + 2 * l + 2 * j;
        edges.emplace_back(3, inner);
        edges.emplace_back(inner, tip);
        colours.push_back(1);
        colours.push_back(3);
    }

    // Extend the T_k recipe: l-2 further O2 at v, then O3 at each of
    // v's 1-leaves (ascending replay id, i.e. arm by arm).
    Certificate base = make_Tk(k).certificate;
    Certificate cert;
    cert.seed = base.seed;
    cert.ops = std::move(base.ops);
    for (int i = 0; i < l - 2; ++i) cert.ops.push_back({OpKind::O2, 2});
    std::vector<int> v_leaves = {6, 7};
    for (int i = 0; i < l - 2; ++i) v_leaves.push_back(8 + 2 * k + i);
    for (int leaf : v_leaves) cert.ops.push_back({OpKind::O3, leaf});

    const int n = 6 + 2 * l + 2 * k;
    cert.relabel.assign(n, -1);
    cert.relabel[0] = 3;
    cert.relabel[1] = 2;
    cert.relabel[2] = 1;
    cert.relabel[3] = 0;
    cert.relabel[4] = 4;
    cert.relabel[5] = 5;
    cert.relabel[6] = 6;       // v-arm 0 inner
    cert.relabel[7] = 8;       // v-arm 1 inner
    for (int j = 0; j < k; ++j) {
        cert.relabel[8 + j] = 6 + 2 * l + 2 * j;
        cert.relabel[8 + k + j] = 7 + 2 * l + 2 * j;
    }
    for (int i = 0; i < l - 2; ++i) {
        cert.relabel[8 + 2 * k + i] = 10 + 2 * i;  // v-arm (2+i) inner
    }
    for (int m = 0; m < l; ++m) {
        cert.relabel[6 + 2 * k + l + m] = 7 + 2 * m;  // v-arm m tip
    }
    return checked(Tree::from_edges(edges), Colouring(3, std::move(colours)),
                   std::move(cert));
}

FamilyReport analyze_family_member(const ColouredTree& ct,
                                   std::optional<Certificate> certificate) {
    FamilyReport rep;
    rep.order = ct.order();
    SolveResult opt = chromatic_packing_number(ct.tree());
    rep.chi_rho = opt.chi_rho;
    UniquenessVerdict verdict = is_uniquely_k_packable(ct.tree(), opt.chi_rho);
    rep.unique = verdict.kind == Uniqueness::Unique;
    const Colouring& c = rep.unique ? verdict.colourings[0] : opt.witness;
    rep.profile = colour_profile(c);
    rep.monotone = rep.profile.monotone;
    rep.colour1_dominates = true;
    for (std::size_t i = 1; i < rep.profile.sizes.size(); ++i) {
        if (rep.profile.sizes[0] < rep.profile.sizes[i]) rep.colour1_dominates = false;
    }
    rep.certificate = std::move(certificate);
    return rep;
}

}  // namespace packtree
