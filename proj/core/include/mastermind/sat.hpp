// sat.hpp -- single-count satisfiability instances and desk-scale solvers
//
// Deciding whether a list of (guess, score) pairs admits a secret is
// NP-complete, so both solvers below carry explicit resource budgets
// instead of any promise of general efficiency.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mastermind/code.hpp"

namespace mastermind {

struct SatConstraint {
    CodeVector guess;
    int score = 0;
};

struct SatInstance {
    int length = 0;     // N
    int num_colors = 0; // K
    std::vector<SatConstraint> constraints;

    /// Throws DimensionError if any guess length, color, or score
    /// violates the instance invariants.
    void validate() const;
};

/// True iff black_count(guess_j, candidate) == score_j for every
/// constraint.
bool is_consistent(const CodeVector &candidate, const SatInstance &inst);

/// Enumerates all K^N vectors in lexicographic order and returns the
/// first satisfying one. Throws TooLarge when the enumeration would
/// exceed check_limit candidate-constraint checks.
std::optional<CodeVector>
solve_exhaustive(const SatInstance &inst,
                 std::uint64_t check_limit = 100'000'000);

/// Depth-first position assignment with prefix pruning: a prefix of p
/// assigned positions survives only if every constraint j satisfies
/// matched_j <= score_j <= matched_j + (N - p). Colors no constraint
/// probes at a position are interchangeable there, so only one of them
/// is tried. Throws BudgetExhausted when more than node_budget
/// assignments are tried.
std::optional<CodeVector>
solve_backtracking(const SatInstance &inst,
                   std::uint64_t node_budget = 50'000'000);

} // namespace mastermind
