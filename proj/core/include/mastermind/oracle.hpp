// oracle.hpp -- the codemaker side of the game

#pragma once

#include <iosfwd>

#include "mastermind/code.hpp"

namespace mastermind {

/// Scoring interface. An honest oracle fixes a secret S and answers
/// every query q with black_count(q, S). Answers must be a pure
/// function of the query for the duration of one solve.
class Oracle {
public:
    virtual ~Oracle() = default;

    virtual int length() const = 0;
    virtual int num_colors() const = 0;

    /// Black-peg score for the query; always in [0, length()].
    virtual int answer(const CodeVector &query) = 0;
};

/// In-memory honest oracle wrapping a fixed secret.
class HonestOracle final : public Oracle {
public:
    HonestOracle(CodeVector secret, int num_colors);

    int length() const override { return static_cast<int>(secret_.size()); }
    int num_colors() const override { return num_colors_; }
    int answer(const CodeVector &query) override;

    const CodeVector &secret() const { return secret_; }

private:
    CodeVector secret_;
    int num_colors_;
};

/// Interactive oracle: prints each query as a prompt and reads an
/// integer score per line. Out-of-range or non-integer input is
/// re-prompted.
class StreamOracle final : public Oracle {
public:
    StreamOracle(int length, int num_colors, std::istream &in, std::ostream &prompt);

    int length() const override { return length_; }
    int num_colors() const override { return num_colors_; }
    int answer(const CodeVector &query) override;

private:
    int length_;
    int num_colors_;
    std::istream &in_;
    std::ostream &prompt_;
};

/// Wrapper that logs every (query, response) pair to a stream in the
/// transcript line format: N space-separated colors, then the score.
class RecordingOracle final : public Oracle {
public:
    RecordingOracle(Oracle &inner, std::ostream &log);

    int length() const override { return inner_.length(); }
    int num_colors() const override { return inner_.num_colors(); }
    int answer(const CodeVector &query) override;

private:
    Oracle &inner_;
    std::ostream &log_;
};

} // namespace mastermind
