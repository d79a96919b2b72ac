#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "packtree/colouring.hpp"
#include "packtree/explorer.hpp"
#include "packtree/packing_bound.hpp"
#include "packtree/tree.hpp"

using namespace packtree;

namespace {

Tree p4() { return Tree::from_edges({{0, 1}, {1, 2}, {2, 3}}); }

Tree random_tree(int n, std::mt19937& rng) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> pick(0, v - 1);
        edges.emplace_back(pick(rng), v);
    }
    return Tree::from_edges(edges);
}

}  // namespace

TEST_CASE("tree_from_edges basics") {
    Tree p = p4();
    CHECK(p.order() == 4);
    CHECK(p.distance(0, 3) == 3);
    CHECK(p.diameter() == 3);

    Tree star = Tree::from_edges({{0, 1}, {0, 2}, {0, 3}});
    CHECK(star.order() == 4);
    CHECK(star.degree(0) == 3);
    CHECK(star.distance(1, 3) == 2);

    CHECK_THROWS_AS(Tree::from_edges({{0, 1}, {1, 2}, {2, 0}}), NotATree);
    CHECK_THROWS_AS(Tree::from_edges({{0, 0}}), NotATree);
    CHECK_THROWS_AS(Tree::from_edges({{0, 1}, {0, 1}, {2, 3}}), NotATree);
    CHECK_THROWS_AS(Tree::from_edges({{0, 1}, {2, 3}, {2, 4}, {3, 4}}), NotATree);
    CHECK_THROWS_AS(Tree::from_edges({{-1, 0}}), BadVertexId);
    // vertex 2 referenced nowhere: 3 vertices need 2 edges
    CHECK_THROWS_AS(Tree::from_edges({{0, 3}, {3, 1}}), NotATree);

    CHECK(Tree::single_vertex().order() == 1);
}

TEST_CASE("distance matrix is a metric") {
    std::mt19937 rng(12345);
    for (int rep = 0; rep < 20; ++rep) {
        Tree t = random_tree(12, rng);
        std::uniform_int_distribution<int> pick(0, t.order() - 1);
        for (int trial = 0; trial < 50; ++trial) {
            int a = pick(rng), b = pick(rng), c = pick(rng);
            CHECK(t.distance(a, b) == t.distance(b, a));
            CHECK(t.distance(a, a) == 0);
            CHECK(t.distance(a, c) <= t.distance(a, b) + t.distance(b, c));
            CHECK((t.distance(a, b) == 1) == t.adjacent(a, b));
        }
    }
}

TEST_CASE("verify_packing") {
    Tree p = p4();
    SUBCASE("valid") {
        auto rep = verify_packing(p, Colouring(3, {1, 2, 1, 3}));
        CHECK(rep.valid);
        CHECK(rep.violations.empty());
    }
    SUBCASE("colour-2 pair at distance 2") {
        auto rep = verify_packing(p, Colouring(3, {1, 2, 1, 2}));
        CHECK_FALSE(rep.valid);
        REQUIRE(rep.violations.size() == 1);
        CHECK(rep.violations[0] == Violation{2, 1, 3, 2});
    }
    SUBCASE("single vertex") {
        auto rep = verify_packing(Tree::single_vertex(), Colouring(1, {1}));
        CHECK(rep.valid);
    }
    SUBCASE("size mismatch") {
        CHECK_THROWS_AS(verify_packing(p, Colouring(3, {1, 2, 1})), SizeMismatch);
    }
    SUBCASE("degree flags mirror the 1-vertex degree fact") {
        Tree star = Tree::from_edges({{0, 1}, {0, 2}, {0, 3}});
        auto rep = verify_packing(star, Colouring(3, {1, 2, 3, 1}));
        CHECK_FALSE(rep.valid);  // two adjacent 1-vertices
        CHECK(rep.degree_flags == std::vector<int>{0});
    }
}

TEST_CASE("violation order is ascending (colour, u, v)") {
    Tree p6 = Tree::from_edges({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});
    auto rep = verify_packing(p6, Colouring(2, {1, 1, 2, 2, 1, 1}));
    REQUIRE(rep.violations.size() >= 2);
    for (std::size_t i = 1; i < rep.violations.size(); ++i) {
        auto& a = rep.violations[i - 1];
        auto& b = rep.violations[i];
        CHECK(std::tie(a.colour, a.u, a.v) < std::tie(b.colour, b.u, b.v));
    }
}

TEST_CASE("colour_profile") {
    Colouring f1(3, {2, 1, 3, 2, 1, 1, 1});
    Profile p = colour_profile(f1);
    CHECK(p.sizes == std::vector<int>{4, 2, 1});
    CHECK(p.monotone);

    Colouring single(1, {1});
    CHECK(colour_profile(single).sizes == std::vector<int>{1});
    CHECK(colour_profile(single).monotone);

    Colouring nonmono(3, {1, 3, 3, 2});
    CHECK_FALSE(colour_profile(nonmono).monotone);
}

TEST_CASE("max_i_packing on P4") {
    Tree p = p4();
    CHECK(max_i_packing(p, 1) == 2);
    CHECK(max_i_packing(p, 2) == 2);
    CHECK(max_i_packing(p, 3) == 1);
}

TEST_CASE("max_i_packing equals subset brute force for all trees n <= 12") {
    for (int n = 1; n <= 12; ++n) {
        for (const Tree& t : gen_trees(n)) {
            for (int i = 1; i <= std::min(6, n); ++i) {
                CAPTURE(n);
                CAPTURE(i);
                REQUIRE(max_i_packing(t, i) == oracles::brute_force_max_i_packing(t, i));
            }
        }
    }
}

TEST_CASE("max_i_packing is non-increasing in i") {
    std::mt19937 rng(777);
    for (int rep = 0; rep < 30; ++rep) {
        Tree t = random_tree(14, rng);
        int prev = max_i_packing(t, 1);
        for (int i = 2; i <= 8; ++i) {
            int cur = max_i_packing(t, i);
            CHECK(cur <= prev);
            prev = cur;
        }
    }
}

TEST_CASE("restriction of a packing to a subtree stays valid") {
    // Hereditary property: distances in the subtree only grow.
    std::mt19937 rng(424242);
    for (int rep = 0; rep < 20; ++rep) {
        Tree t = random_tree(10, rng);
        auto sols = oracles::brute_force_packings(t, 3);
        if (sols.empty()) continue;
        const Colouring& c = sols[0];
        // Remove one leaf, keep labels compact by swapping with last id.
        int leaf = -1;
        for (int v = t.order() - 1; v >= 0; --v) {
            if (t.degree(v) == 1) {
                leaf = v;
                break;
            }
        }
        REQUIRE(leaf >= 0);
        std::vector<std::pair<int, int>> edges;
        auto remap = [&](int v) { return v == t.order() - 1 ? leaf : v; };
        for (auto [a, b] : t.edge_list()) {
            if (a == leaf || b == leaf) continue;
            edges.emplace_back(remap(a), remap(b));
        }
        Tree h = Tree::from_edges(edges);
        std::vector<int> cols(h.order());
        for (int v = 0; v < t.order(); ++v) {
            if (v != leaf) cols[remap(v)] = c[v];
        }
        CHECK(verify_packing(h, Colouring(3, cols)).valid);
    }
}
