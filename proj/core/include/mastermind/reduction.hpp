// reduction.hpp -- 3-Dimensional Matching to single-count satisfiability
//
// Color mapping of the reduced instance: null color -> 0, boolean-0 ->
// 1, triple color s -> s+1 (s = 1..m); boolean-1 is identified with
// triple color 1, so the palette has m+2 colors. Position layout:
// X-block 0..n-1, Y-block n..2n-1, Z-block 2n..3n-1, T-block
// 3n..3n+m-1.

#pragma once

#include <optional>
#include <vector>

#include "mastermind/sat.hpp"

namespace mastermind {

struct ThreeDmTriple {
    int x = 0, y = 0, z = 0; // 1-based indices in [1, n]
};

struct ThreeDmInstance {
    int n = 0; // size of each of X, Y, Z
    std::vector<ThreeDmTriple> triples;

    int num_triples() const { return static_cast<int>(triples.size()); }

    /// Throws MalformedInstance on empty sets or out-of-range indices.
    void validate() const;
};

/// Chosen triple indices, 1-based.
struct Matching {
    std::vector<int> chosen;
};

constexpr Color kNullColor = 0;
constexpr Color kFalseColor = 1;

/// Palette color of triple s (1-based).
constexpr Color triple_color(int s) { return s + 1; }

/// Boolean-1, identified with the first triple's color.
constexpr Color kTrueColor = triple_color(1);

/// Builds the satisfiability instance: N = 3n+m, palette m+2, and
/// 3+3m constraints (three enforcers, then three chooser queries per
/// triple). Rejects m < n, whose instances trivially have no perfect
/// matching, since they would need a negative enforcer score.
SatInstance reduce_to_sat(const ThreeDmInstance &tdm);

/// Reads the chosen triples off a satisfying vector: those whose
/// T-position holds boolean-1. Throws NotAWitness if the vector does
/// not satisfy reduce_to_sat(tdm).
Matching extract_matching(const CodeVector &witness, const ThreeDmInstance &tdm);

/// Searches all n-subsets of triples with coverage pruning. Desk scale
/// only: throws TooLarge beyond n = 8 or m = 16.
std::optional<Matching> solve_3dm_bruteforce(const ThreeDmInstance &tdm);

/// True iff exactly n triples are chosen and they cover each of the 3n
/// elements exactly once.
bool verify_matching(const ThreeDmInstance &tdm, const Matching &matching);

} // namespace mastermind
