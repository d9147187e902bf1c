#include <doctest.h>

#include <sstream>

#include "mastermind/io.hpp"
#include "mastermind/rng.hpp"
#include "mastermind/solver.hpp"
#include "test_util.hpp"

using namespace mastermind;
using testutil::for_each_vector;

namespace {

// Oracle that replays scripted answers, for driving error paths.
class ScriptedOracle final : public Oracle {
public:
    ScriptedOracle(int length, int num_colors, std::vector<int> answers)
        : length_(length), num_colors_(num_colors), answers_(std::move(answers))
    {
    }
    int length() const override { return length_; }
    int num_colors() const override { return num_colors_; }
    int answer(const CodeVector &) override
    {
        REQUIRE(next_ < answers_.size());
        return answers_[next_++];
    }

private:
    int length_;
    int num_colors_;
    std::vector<int> answers_;
    std::size_t next_ = 0;
};

void check_transcript_legal(const SolveTranscript &t, const CodeVector &secret,
                            int num_colors)
{
    for (const auto &[query, score] : t.queries) {
        CHECK(query.size() == secret.size());
        for (Color c : query) {
            CHECK(c >= 0);
            CHECK(c < num_colors);
        }
        CHECK(score == black_count(query, secret));
    }
}

} // namespace

TEST_CASE("bound formulas")
{
    CHECK(guess_bound(4, 6) == 26);
    CHECK(guess_bound(64, 16) == 396);
    CHECK(guess_bound(4, 1) == 5);
    CHECK(guess_bound(1, 1) == 2);
    CHECK(guess_bound(4, 2) == 12);
    CHECK(guess_bound(4, 3) == 18);

    CHECK(reference_bounds(64, 16).chvatal == 768);
    CHECK(reference_bounds(4, 6).chvatal == 40);
    CHECK(reference_bounds(1, 1).chvatal == 4);
    CHECK(reference_bounds(1, 1).chen == 5);

    CHECK(naive_bound(4, 6) == 21);
}

TEST_CASE("initial census")
{
    SUBCASE("two colors") {
        HonestOracle oracle({1, 2, 1, 2}, 3);
        SolveTranscript t;
        ColorCensus census = initial_census(oracle, &t);
        CHECK(census == ColorCensus{0, 2, 2});
        CHECK(t.query_count() == 3);
    }
    SUBCASE("monochrome, K=1") {
        HonestOracle oracle({0, 0, 0}, 1);
        CHECK(initial_census(oracle) == ColorCensus{3});
    }
    SUBCASE("absent colors score zero") {
        HonestOracle oracle({2, 2}, 3);
        CHECK(initial_census(oracle) == ColorCensus{0, 0, 2});
    }
    SUBCASE("responses must sum to N") {
        ScriptedOracle oracle(3, 2, {1, 1});
        CHECK_THROWS_AS(initial_census(oracle), InconsistentOracle);
    }
}

TEST_CASE("hand-traced split of [1,2,1,2] over two colors")
{
    // Palette {1,2}, so internally the filler is color 1 and one split
    // query covers the range.
    HonestOracle oracle({1, 2, 1, 2}, 3);
    std::vector<SplitInfo> splits;
    SolveTranscript t = solve(oracle, [&](const SplitInfo &s) { splits.push_back(s); });

    CHECK(t.recovered == CodeVector{1, 2, 1, 2});
    CHECK(t.query_count() == 6); // 3 census + 3 splits (K=3 advertised)

    REQUIRE(!splits.empty());
    const SplitInfo &root = splits.front();
    CHECK(root.lo == 0);
    CHECK(root.hi == 3);
    CHECK(root.mid == 1);
    CHECK(root.palette == std::vector<Color>{1, 2});
    CHECK(root.census == std::vector<int>{2, 2});
    CHECK(root.filler_outside == 0);
    CHECK(root.responses == std::vector<int>{2});
    CHECK(root.left_counts == std::vector<int>{1, 1});
    CHECK(root.right_counts == std::vector<int>{1, 1});
}

TEST_CASE("solve recovers every secret exhaustively and respects the bound")
{
    struct Case {
        int n, k;
    };
    for (Case c : {Case{4, 3}, Case{3, 4}, Case{5, 2}}) {
        for_each_vector(c.n, c.k, [&](const CodeVector &secret) {
            HonestOracle oracle(secret, c.k);
            SolveTranscript t = solve(oracle);
            CHECK(t.recovered == secret);
            CHECK(t.query_count() <= guess_bound(c.n, c.k));
            check_transcript_legal(t, secret, c.k);
        });
    }
}

TEST_CASE("split cardinalities match the true half censuses")
{
    for (int k = 1; k <= 4; ++k) {
        for (int n = 1; n <= 6; ++n) {
            for_each_vector(n, k, [&](const CodeVector &secret) {
                HonestOracle oracle(secret, k);
                SolveTranscript t = solve(oracle, [&](const SplitInfo &s) {
                    int left_len = s.mid - s.lo + 1;
                    int right_len = s.hi - s.mid;
                    ColorCensus left = color_histogram(secret, k, s.lo, s.mid);
                    ColorCensus right = color_histogram(secret, k, s.mid + 1, s.hi);
                    int left_sum = 0, right_sum = 0;
                    for (std::size_t i = 0; i < s.palette.size(); ++i) {
                        auto color = static_cast<std::size_t>(s.palette[i]);
                        CHECK(s.left_counts[i] == left[color]);
                        CHECK(s.right_counts[i] == right[color]);
                        CHECK(s.left_counts[i] + s.right_counts[i] == s.census[i]);
                        left_sum += s.left_counts[i];
                        right_sum += s.right_counts[i];
                    }
                    CHECK(left_sum == left_len);
                    CHECK(right_sum == right_len);
                    // The closed-form numerator divides evenly.
                    long long numerator = s.census[0] - left_len;
                    for (int b : s.responses)
                        numerator += b - s.filler_outside;
                    CHECK(numerator % static_cast<long long>(s.palette.size()) == 0);
                });
                CHECK(t.recovered == secret);
            });
        }
    }
}

TEST_CASE("solve handles larger random instances")
{
    struct Case {
        int n, k;
    };
    SplitMix64 rng(2024);
    for (Case c : {Case{256, 32}, Case{100, 7}, Case{31, 5}, Case{64, 16}}) {
        for (int i = 0; i < 5; ++i) {
            CodeVector secret = random_secret(c.n, c.k, rng);
            HonestOracle oracle(secret, c.k);
            SolveTranscript t = solve(oracle);
            CHECK(t.recovered == secret);
            CHECK(t.query_count() <= guess_bound(c.n, c.k));
        }
    }
}

TEST_CASE("monochrome secret with K=1 takes one query")
{
    HonestOracle oracle({0, 0, 0, 0}, 1);
    SolveTranscript t = solve(oracle);
    CHECK(t.recovered == CodeVector{0, 0, 0, 0});
    CHECK(t.query_count() == 1);
}

TEST_CASE("naive solve")
{
    SUBCASE("hand trace") {
        HonestOracle oracle({1, 0}, 2);
        SolveTranscript t = naive_solve(oracle);
        CHECK(t.recovered == CodeVector{1, 0});
        CHECK(t.query_count() == 3);
    }
    SUBCASE("all-zero secret") {
        HonestOracle oracle({0, 0, 0}, 3);
        SolveTranscript t = naive_solve(oracle);
        CHECK(t.recovered == CodeVector{0, 0, 0});
        CHECK(t.query_count() == naive_bound(3, 3));
    }
    SUBCASE("agrees with the split solver on all small secrets") {
        for (int k = 2; k <= 3; ++k) {
            for (int n = 1; n <= 4; ++n) {
                for_each_vector(n, k, [&](const CodeVector &secret) {
                    HonestOracle a(secret, k);
                    HonestOracle b(secret, k);
                    CHECK(naive_solve(a).recovered == solve(b).recovered);
                });
            }
        }
    }
    SUBCASE("K=1 is rejected") {
        HonestOracle oracle({0, 0}, 1);
        CHECK_THROWS_AS(naive_solve(oracle), DimensionError);
    }
}

TEST_CASE("dishonest oracles that are caught")
{
    SUBCASE("split numerator not divisible") {
        // N=2, K=2 census says one of each; split query answered with
        // an impossible score.
        ScriptedOracle oracle(2, 2, {1, 1, 1});
        CHECK_THROWS_AS(solve(oracle), SolveAborted);
    }
    SUBCASE("aborted solve carries the partial transcript") {
        ScriptedOracle oracle(3, 2, {1, 1});
        try {
            solve(oracle);
            FAIL("expected SolveAborted");
        } catch (const SolveAborted &e) {
            CHECK(e.partial.query_count() == 2);
        }
    }
}

TEST_CASE("stream oracle prompts and retries bad input")
{
    std::istringstream in("banana\n9\n2\n2\n");
    std::ostringstream prompt;
    StreamOracle oracle(4, 2, in, prompt);
    CHECK(oracle.answer({0, 0, 0, 0}) == 2);
    CHECK(oracle.answer({1, 1, 1, 1}) == 2);
    CHECK(prompt.str().find("query: 0 0 0 0") != std::string::npos);
}

TEST_CASE("recording oracle logs transcript lines")
{
    HonestOracle secret_holder({1, 0}, 2);
    std::ostringstream log;
    RecordingOracle recorder(secret_holder, log);
    SolveTranscript t = solve(recorder);
    CHECK(t.recovered == CodeVector{1, 0});
    // Log lines parse back as the transcript instance.
    SatInstance inst = parse_sat_instance("2 2\n" + log.str());
    CHECK(static_cast<int>(inst.constraints.size()) == t.query_count());
}
