#include "mastermind/solver.hpp"

#include <bit>
#include <cstdint>
#include <numeric>

namespace mastermind {

namespace {

long long ceil_log2(long long v)
{
    return std::bit_width(static_cast<std::uint64_t>(v - 1));
}

long long ceil_div(long long a, long long b)
{
    return (a + b - 1) / b;
}

class SplitSolver {
public:
    SplitSolver(Oracle &oracle, const SplitObserver &on_split)
        : oracle_(oracle), on_split_(on_split),
          length_(oracle.length()), num_colors_(oracle.num_colors())
    {
    }

    SolveTranscript run()
    {
        global_ = initial_census(oracle_, &transcript_);
        transcript_.recovered.assign(static_cast<std::size_t>(length_), 0);

        // Zero-count colors are pruned once, here; recursion re-prunes
        // per range.
        std::vector<Color> palette;
        std::vector<int> census;
        for (Color c = 0; c < num_colors_; ++c) {
            if (global_[static_cast<std::size_t>(c)] > 0) {
                palette.push_back(c);
                census.push_back(global_[static_cast<std::size_t>(c)]);
            }
        }
        solve_range(0, length_ - 1, palette, census);
        return std::move(transcript_);
    }

private:
    int ask(CodeVector query)
    {
        int score = oracle_.answer(query);
        if (score < 0 || score > length_)
            abort_solve("response outside [0, N]");
        transcript_.queries.emplace_back(std::move(query), score);
        return score;
    }

    [[noreturn]] void abort_solve(const std::string &msg)
    {
        throw SolveAborted(msg, std::move(transcript_));
    }

    void solve_range(int lo, int hi, const std::vector<Color> &palette,
                     const std::vector<int> &census)
    {
        if (lo > hi)
            return;
        if (palette.size() == 1) {
            for (int j = lo; j <= hi; ++j)
                transcript_.recovered[static_cast<std::size_t>(j)] = palette[0];
            return;
        }

        SplitInfo info;
        info.lo = lo;
        info.hi = hi;
        info.mid = lo + (hi - lo) / 2;
        info.palette = palette;
        info.census = census;

        const Color filler = palette[0];
        const int range_colors = static_cast<int>(palette.size());
        const int left_len = info.mid - lo + 1;
        const int right_len = hi - info.mid;
        info.filler_outside =
            global_[static_cast<std::size_t>(filler)] - census[0];

        // One query per non-filler palette color: that color on the
        // left half, filler everywhere else in the whole vector.
        long long score_sum = 0;
        for (int i = 1; i < range_colors; ++i) {
            CodeVector query(static_cast<std::size_t>(length_), filler);
            for (int j = lo; j <= info.mid; ++j)
                query[static_cast<std::size_t>(j)] = palette[static_cast<std::size_t>(i)];
            int b = ask(std::move(query));
            info.responses.push_back(b);
            score_sum += b - info.filler_outside;
        }

        long long numerator = census[0] + score_sum - left_len;
        if (numerator % range_colors != 0)
            abort_solve("split numerator not divisible by the range palette size");
        long long filler_right = numerator / range_colors;
        if (filler_right < 0 || filler_right > right_len)
            abort_solve("filler count of the right half out of range");

        auto &x = info.left_counts;
        auto &y = info.right_counts;
        x.assign(palette.size(), 0);
        y.assign(palette.size(), 0);
        y[0] = static_cast<int>(filler_right);
        x[0] = census[0] - y[0];
        long long left_sum = x[0];
        for (int i = 1; i < range_colors; ++i) {
            auto k = static_cast<std::size_t>(i);
            x[k] = static_cast<int>(info.responses[k - 1] - info.filler_outside -
                                    filler_right);
            y[k] = census[k] - x[k];
            left_sum += x[k];
        }
        for (int i = 0; i < range_colors; ++i) {
            auto k = static_cast<std::size_t>(i);
            if (x[k] < 0 || y[k] < 0)
                abort_solve("negative half-range cardinality");
        }
        if (left_sum != left_len)
            abort_solve("left half cardinalities do not sum to its length");

        if (on_split_)
            on_split_(info);

        std::vector<Color> child_palette;
        std::vector<int> child_census;
        for (int i = 0; i < range_colors; ++i) {
            auto k = static_cast<std::size_t>(i);
            if (x[k] > 0) {
                child_palette.push_back(palette[k]);
                child_census.push_back(x[k]);
            }
        }
        solve_range(lo, info.mid, child_palette, child_census);

        child_palette.clear();
        child_census.clear();
        for (int i = 0; i < range_colors; ++i) {
            auto k = static_cast<std::size_t>(i);
            if (y[k] > 0) {
                child_palette.push_back(palette[k]);
                child_census.push_back(y[k]);
            }
        }
        solve_range(info.mid + 1, hi, child_palette, child_census);
    }

    Oracle &oracle_;
    const SplitObserver &on_split_;
    int length_;
    int num_colors_;
    ColorCensus global_;
    SolveTranscript transcript_;
};

} // namespace

ColorCensus initial_census(Oracle &oracle, SolveTranscript *transcript)
{
    const int length = oracle.length();
    const int num_colors = oracle.num_colors();
    if (length < 1 || num_colors < 1)
        throw DimensionError("initial_census: need N >= 1 and K >= 1");
    ColorCensus census(static_cast<std::size_t>(num_colors), 0);
    int total = 0;
    for (Color c = 0; c < num_colors; ++c) {
        CodeVector query(static_cast<std::size_t>(length), c);
        int score = oracle.answer(query);
        if (transcript)
            transcript->queries.emplace_back(std::move(query), score);
        if (score < 0 || score > length) {
            if (transcript)
                throw SolveAborted("census response outside [0, N]",
                                   std::move(*transcript));
            throw InconsistentOracle("census response outside [0, N]");
        }
        census[static_cast<std::size_t>(c)] = score;
        total += score;
    }
    if (total != length) {
        if (transcript)
            throw SolveAborted("census responses do not sum to N",
                               std::move(*transcript));
        throw InconsistentOracle("census responses do not sum to N");
    }
    return census;
}

SolveTranscript solve(Oracle &oracle, const SplitObserver &on_split)
{
    return SplitSolver(oracle, on_split).run();
}

SolveTranscript naive_solve(Oracle &oracle)
{
    const int length = oracle.length();
    const int num_colors = oracle.num_colors();
    if (length < 1 || num_colors < 2)
        throw DimensionError("naive_solve: need N >= 1 and K >= 2");

    SolveTranscript transcript;
    auto ask = [&](CodeVector query) {
        int score = oracle.answer(query);
        if (score < 0 || score > length)
            throw SolveAborted("response outside [0, N]", std::move(transcript));
        transcript.queries.emplace_back(std::move(query), score);
        return score;
    };

    const int baseline = ask(CodeVector(static_cast<std::size_t>(length), 0));
    transcript.recovered.assign(static_cast<std::size_t>(length), 0);
    for (int p = 0; p < length; ++p) {
        bool decided = false;
        for (Color c = 1; c < num_colors; ++c) {
            CodeVector query(static_cast<std::size_t>(length), 0);
            query[static_cast<std::size_t>(p)] = c;
            int score = ask(std::move(query));
            if (score == baseline + 1) {
                if (decided)
                    throw SolveAborted("two colors both score baseline+1 at one position",
                                       std::move(transcript));
                transcript.recovered[static_cast<std::size_t>(p)] = c;
                decided = true;
            }
        }
    }
    return transcript;
}

long long guess_bound(long long n, long long k)
{
    return n * ceil_log2(k) + ceil_div((2 * k - 1) * n, k) + k;
}

long long naive_bound(long long n, long long k)
{
    return n * (k - 1) + 1;
}

ReferenceBounds reference_bounds(long long n, long long k)
{
    ReferenceBounds bounds;
    bounds.chvatal = 2 * n * ceil_log2(k) + 4 * n;
    bounds.chen = 2 * n * ceil_log2(n) + 2 * n + ceil_div(k, n) + 2;
    return bounds;
}

} // namespace mastermind
