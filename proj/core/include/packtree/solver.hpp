#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "packtree/colouring.hpp"
#include "packtree/tree.hpp"

namespace packtree {

struct SolveResult {
    int chi_rho = 0;
    Colouring witness;
    std::uint64_t nodes_explored = 0;
    std::chrono::duration<double> elapsed{0};
};

enum class Uniqueness { Unique, Multiple, WrongK };

struct UniquenessVerdict {
    Uniqueness kind = Uniqueness::WrongK;
    /// The single colouring if Unique; exactly two distinct witnesses
    /// if Multiple; empty if WrongK.
    std::vector<Colouring> colourings;
    int true_chi_rho = 0;  // set when kind == WrongK
};

/// Smallest k admitting a packing colouring, by iterating k = 1,2,...
/// and running the backtracking search in decision mode.
/// Throws LimitExceeded if k_limit is reached without success.
SolveResult chromatic_packing_number(const Tree& t,
                                     std::optional<int> k_limit = {});

/// All valid k-packings of t, in lexicographic order of the colour
/// vector. With cap, stops after cap solutions (search order is
/// deterministic, so capped output is too).
std::vector<Colouring> enumerate_k_packings(const Tree& t, int k,
                                            std::optional<std::uint64_t> cap = {});

/// Number of valid k-packings, stopping exactly at cap if given.
std::uint64_t count_k_packings(const Tree& t, int k,
                               std::optional<std::uint64_t> cap = {});

UniquenessVerdict is_uniquely_k_packable(const Tree& t, int k);

/// Necessary condition for a k-packing to exist:
/// sum_{i=1..k} max_i_packing(t,i) >= n.
bool packing_count_bound_feasible(const Tree& t, int k);

}  // namespace packtree
