// solver.hpp -- divide-and-conquer codebreaker for black-peg-only play

#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "mastermind/code.hpp"
#include "mastermind/oracle.hpp"

namespace mastermind {

/// Ordered record of one solve run.
struct SolveTranscript {
    std::vector<std::pair<CodeVector, int>> queries;
    CodeVector recovered;

    int query_count() const { return static_cast<int>(queries.size()); }
};

/// Thrown when a solve detects an impossible set of responses; carries
/// the queries issued so far.
struct SolveAborted : InconsistentOracle {
    SolveTranscript partial;

    SolveAborted(const std::string &msg, SolveTranscript partial_)
        : InconsistentOracle(msg), partial(std::move(partial_))
    {
    }
};

/// State of one range split, exposed to observers so the linear solve
/// can be checked against ground truth.
struct SplitInfo {
    int lo = 0, hi = 0, mid = 0;
    std::vector<Color> palette;      // colors present in [lo,hi], ascending; [0] is the filler
    std::vector<int> census;         // per-palette counts within [lo,hi]
    int filler_outside = 0;          // the d offset: filler occurrences outside [lo,hi]
    std::vector<int> responses;      // scores of the split queries, one per palette[1..]
    std::vector<int> left_counts;    // x: per-palette counts of [lo,mid]
    std::vector<int> right_counts;   // y: per-palette counts of [mid+1,hi]
};

using SplitObserver = std::function<void(const SplitInfo &)>;

/// Issues K monochromatic queries and returns the per-color census.
/// Throws InconsistentOracle if the responses do not sum to N. When a
/// transcript is given, the queries are appended to it.
ColorCensus initial_census(Oracle &oracle, SolveTranscript *transcript = nullptr);

/// Recovers the secret with at most guess_bound(N, K) queries against
/// an honest oracle. The observer, when set, fires once per range
/// split. Throws SolveAborted on detected inconsistency.
SolveTranscript solve(Oracle &oracle, const SplitObserver &on_split = {});

/// Baseline: one all-zero query plus one query per (position, nonzero
/// color); exactly N*(K-1)+1 queries. Requires K >= 2.
SolveTranscript naive_solve(Oracle &oracle);

/// N*ceil(log2 K) + ceil((2 - 1/K)*N) + K, exact integer arithmetic.
long long guess_bound(long long n, long long k);

/// Query count of naive_solve: N*(K-1) + 1.
long long naive_bound(long long n, long long k);

struct ReferenceBounds {
    long long chvatal; // 2N*ceil(log2 K) + 4N
    long long chen;    // 2N*ceil(log2 N) + 2N + ceil(K/N) + 2
};

ReferenceBounds reference_bounds(long long n, long long k);

} // namespace mastermind
