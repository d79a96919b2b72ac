#pragma once

#include <optional>

#include "packtree/construct.hpp"
#include "packtree/solver.hpp"

namespace packtree {

struct FamilyMember {
    ColouredTree ct;
    Certificate certificate;
};

struct FamilyReport {
    int order = 0;
    int chi_rho = 0;
    bool unique = false;
    Profile profile;
    bool monotone = false;
    /// Dominance check on the (unique) optimal colouring:
    /// c_1 >= c_i for all i.
    bool colour1_dominates = false;
    std::optional<Certificate> certificate;
};

/// T_k, k >= 2: spine u(2),v(3),x(1),y(2); two 1-leaves on each of u
/// and v; k arms (1,3) on y. Order 2k+8, unique profile (k+5, 2, k+1).
/// Canonical labels: u=0, v=1, x=2, y=3; u-leaves 4,5; v-leaves 6,7;
/// then y-arms in increasing order, inner vertex before tip.
FamilyMember make_Tk(int k);

/// T_{l,k}, l,k >= 2: spine as T_k but with l arms (1,2) on v instead
/// of the two v-leaves. Order 2l+2k+6; monotone unique colouring iff
/// l >= k-1.
FamilyMember make_Tlk(int l, int k);

FamilyReport analyze_family_member(const ColouredTree& ct,
                                   std::optional<Certificate> certificate = {});

}  // namespace packtree
