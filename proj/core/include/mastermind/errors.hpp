// errors.hpp -- exception types shared across the library

#pragma once

#include <stdexcept>
#include <string>

namespace mastermind {

/// Mismatched vector lengths or an out-of-bounds range.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The oracle's responses admit no secret (detected best-effort).
struct InconsistentOracle : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Instance exceeds the solver's scale gate.
struct TooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Search budget exhausted; the decision is unknown.
struct BudgetExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Structurally invalid instance (e.g. fewer triples than elements).
struct MalformedInstance : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A claimed witness fails the instance it was supposed to satisfy.
struct NotAWitness : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Text format error with a 1-based location.
struct ParseError : std::runtime_error {
    int line;
    int column;

    ParseError(const std::string &msg, int line_, int column_)
        : std::runtime_error("line " + std::to_string(line_) + ", column " +
                             std::to_string(column_) + ": " + msg),
          line(line_), column(column_)
    {
    }
};

} // namespace mastermind
