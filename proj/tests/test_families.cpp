#include <doctest.h>

#include "packtree/families.hpp"
#include "packtree/solver.hpp"

using namespace packtree;

TEST_CASE("T_k shape and profile") {
    for (int k = 2; k <= 6; ++k) {
        CAPTURE(k);
        FamilyMember m = make_Tk(k);
        CHECK(m.ct.order() == 2 * k + 8);
        CHECK(m.ct.certified());
        Profile p = colour_profile(m.ct.colouring());
        CHECK(p.sizes == std::vector<int>{k + 5, 2, k + 1});
        CHECK_FALSE(p.monotone);  // 2 < k+1 for every k >= 2
        // canonical labels: spine and leaf colours
        CHECK(m.ct.colour_of(0) == 2);  // u
        CHECK(m.ct.colour_of(1) == 3);  // v
        CHECK(m.ct.colour_of(2) == 1);  // x
        CHECK(m.ct.colour_of(3) == 2);  // y
        for (int leaf : {4, 5, 6, 7}) CHECK(m.ct.colour_of(leaf) == 1);
        for (int j = 0; j < k; ++j) {
            CHECK(m.ct.colour_of(8 + 2 * j) == 1);
            CHECK(m.ct.colour_of(9 + 2 * j) == 3);
            CHECK(m.ct.tree().adjacent(3, 8 + 2 * j));
            CHECK(m.ct.tree().adjacent(8 + 2 * j, 9 + 2 * j));
        }
    }
    CHECK_THROWS_AS(make_Tk(1), BadParameter);
}

TEST_CASE("T_k certificates replay to the generated member") {
    for (int k = 2; k <= 6; ++k) {
        FamilyMember m = make_Tk(k);
        ColouredTree back = replay_certificate(m.certificate);
        CHECK(back.tree() == m.ct.tree());
        CHECK(back.colouring().colours == m.ct.colouring().colours);
    }
}

TEST_CASE("T_k members are uniquely 3-packable") {
    for (int k = 2; k <= 5; ++k) {
        FamilyMember m = make_Tk(k);
        auto v = is_uniquely_k_packable(m.ct.tree(), 3);
        REQUIRE(v.kind == Uniqueness::Unique);
        CHECK(v.colourings[0].colours == m.ct.colouring().colours);
    }
}

TEST_CASE("T_lk shape, uniqueness and the monotonicity threshold") {
    for (int l = 2; l <= 4; ++l) {
        for (int k = 2; k <= 4; ++k) {
            CAPTURE(l);
            CAPTURE(k);
            FamilyMember m = make_Tlk(l, k);
            CHECK(m.ct.order() == 2 * l + 2 * k + 6);
            auto v = is_uniquely_k_packable(m.ct.tree(), 3);
            REQUIRE(v.kind == Uniqueness::Unique);
            Profile p = colour_profile(m.ct.colouring());
            CHECK(p.sizes == std::vector<int>{l + k + 3, l + 2, k + 1});
            CHECK(p.monotone == (l >= k - 1));

            ColouredTree back = replay_certificate(m.certificate);
            CHECK(back.tree() == m.ct.tree());
            CHECK(back.colouring().colours == m.ct.colouring().colours);
        }
    }
    CHECK_THROWS_AS(make_Tlk(1, 3), BadParameter);
    CHECK_THROWS_AS(make_Tlk(3, 1), BadParameter);
}

TEST_CASE("analyze_family_member") {
    FamilyMember m = make_Tk(3);
    FamilyReport rep = analyze_family_member(m.ct, m.certificate);
    CHECK(rep.order == 14);
    CHECK(rep.chi_rho == 3);
    CHECK(rep.unique);
    CHECK(rep.profile.sizes == std::vector<int>{8, 2, 4});
    CHECK_FALSE(rep.monotone);
    CHECK(rep.colour1_dominates);
    REQUIRE(rep.certificate.has_value());
    CHECK(*rep.certificate == m.certificate);
}
