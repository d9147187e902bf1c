#include "mastermind/sat.hpp"

#include <algorithm>

namespace mastermind {

void SatInstance::validate() const
{
    if (length < 0 || num_colors < 0)
        throw DimensionError("SatInstance: negative dimensions");
    for (const SatConstraint &c : constraints) {
        if (static_cast<int>(c.guess.size()) != length)
            throw DimensionError("SatInstance: guess length differs from N");
        for (Color color : c.guess)
            if (color < 0 || color >= num_colors)
                throw DimensionError("SatInstance: guess color outside palette");
        if (c.score < 0 || c.score > length)
            throw DimensionError("SatInstance: score outside [0, N]");
    }
}

bool is_consistent(const CodeVector &candidate, const SatInstance &inst)
{
    if (static_cast<int>(candidate.size()) != inst.length)
        throw DimensionError("is_consistent: candidate length differs from N");
    for (const SatConstraint &c : inst.constraints)
        if (black_count(c.guess, candidate) != c.score)
            return false;
    return true;
}

std::optional<CodeVector> solve_exhaustive(const SatInstance &inst,
                                           std::uint64_t check_limit)
{
    inst.validate();
    const int n = inst.length;
    const int k = inst.num_colors;
    if (n > 0 && k == 0)
        return std::nullopt;

    const std::uint64_t per_candidate =
        std::max<std::uint64_t>(1, inst.constraints.size());
    std::uint64_t candidates = 1;
    for (int i = 0; i < n; ++i) {
        if (candidates > check_limit / static_cast<std::uint64_t>(k))
            throw TooLarge("solve_exhaustive: K^N exceeds the enumeration cap");
        candidates *= static_cast<std::uint64_t>(k);
    }
    if (candidates > check_limit / per_candidate)
        throw TooLarge("solve_exhaustive: exceeds the candidate-constraint check cap");

    CodeVector v(static_cast<std::size_t>(n), 0);
    for (;;) {
        if (is_consistent(v, inst))
            return v;
        int p = n - 1;
        while (p >= 0 && v[static_cast<std::size_t>(p)] == k - 1) {
            v[static_cast<std::size_t>(p)] = 0;
            --p;
        }
        if (p < 0)
            return std::nullopt;
        ++v[static_cast<std::size_t>(p)];
    }
}

std::optional<CodeVector> solve_backtracking(const SatInstance &inst,
                                             std::uint64_t node_budget)
{
    inst.validate();
    const int n = inst.length;
    const int k = inst.num_colors;
    const auto &constraints = inst.constraints;

    CodeVector assignment(static_cast<std::size_t>(n), 0);
    std::vector<int> matched(constraints.size(), 0);
    std::uint64_t nodes = 0;

    // Viability of a prefix of len assigned positions.
    auto viable = [&](int len) {
        for (std::size_t j = 0; j < constraints.size(); ++j) {
            int score = constraints[j].score;
            if (matched[j] > score || matched[j] + (n - len) < score)
                return false;
        }
        return true;
    };

    // Colors that no constraint probes at position p are interchangeable
    // there: assigning any of them leaves the same matched state and the
    // same residual problem. Trying one representative per class keeps
    // the decision (and witness validity) intact while collapsing the
    // branching on unconstrained positions.
    std::vector<char> probed(static_cast<std::size_t>(n) * static_cast<std::size_t>(k), 0);
    for (const SatConstraint &c : constraints)
        for (int p = 0; p < n; ++p)
            probed[static_cast<std::size_t>(p) * static_cast<std::size_t>(k) +
                   static_cast<std::size_t>(c.guess[static_cast<std::size_t>(p)])] = 1;

    auto dfs = [&](auto &&self, int p) -> bool {
        if (p == n)
            return true;
        const char *probed_here =
            probed.data() + static_cast<std::size_t>(p) * static_cast<std::size_t>(k);
        bool tried_unprobed = false;
        for (Color c = 0; c < k; ++c) {
            if (!probed_here[static_cast<std::size_t>(c)]) {
                if (tried_unprobed)
                    continue;
                tried_unprobed = true;
            }
            if (++nodes > node_budget)
                throw BudgetExhausted("solve_backtracking: node budget exhausted");
            assignment[static_cast<std::size_t>(p)] = c;
            for (std::size_t j = 0; j < constraints.size(); ++j)
                if (constraints[j].guess[static_cast<std::size_t>(p)] == c)
                    ++matched[j];
            if (viable(p + 1) && self(self, p + 1))
                return true;
            for (std::size_t j = 0; j < constraints.size(); ++j)
                if (constraints[j].guess[static_cast<std::size_t>(p)] == c)
                    --matched[j];
        }
        return false;
    };

    if (n == 0)
        return viable(0) ? std::optional<CodeVector>(CodeVector{}) : std::nullopt;
    if (!viable(0))
        return std::nullopt;
    if (dfs(dfs, 0))
        return assignment;
    return std::nullopt;
}

} // namespace mastermind
