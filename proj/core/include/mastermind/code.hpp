// code.hpp -- color vectors and the two score functions

#pragma once

#include <vector>

#include "mastermind/errors.hpp"

namespace mastermind {

/// A color is an index into the palette: 0 <= color < K.
using Color = int;

/// A fixed-length sequence of colors; both secrets and guesses.
using CodeVector = std::vector<Color>;

/// Per-color cardinalities, indexed by color.
using ColorCensus = std::vector<int>;

/// Number of positions where guess and secret agree in both color and
/// location. Symmetric; throws DimensionError on length mismatch.
int black_count(const CodeVector &guess, const CodeVector &secret);

/// Additional color matches achievable under some permutation of guess
/// positions, beyond the black count. Computed via the multiset closed
/// form sum_c min(count_c(guess), count_c(secret)) - black_count.
int white_count(const CodeVector &guess, const CodeVector &secret);

/// Counts of each color in v[lo..hi] (inclusive). Throws DimensionError
/// if the range is out of bounds.
ColorCensus color_histogram(const CodeVector &v, int num_colors, int lo, int hi);

} // namespace mastermind
