#include "mastermind/code.hpp"

#include <algorithm>

namespace mastermind {

int black_count(const CodeVector &guess, const CodeVector &secret)
{
    if (guess.size() != secret.size())
        throw DimensionError("black_count: vectors differ in length");
    int b = 0;
    for (std::size_t j = 0; j < guess.size(); ++j)
        if (guess[j] == secret[j])
            ++b;
    return b;
}

int white_count(const CodeVector &guess, const CodeVector &secret)
{
    if (guess.size() != secret.size())
        throw DimensionError("white_count: vectors differ in length");
    Color max_color = 0;
    for (Color c : guess)
        max_color = std::max(max_color, c);
    for (Color c : secret)
        max_color = std::max(max_color, c);
    std::vector<int> gc(static_cast<std::size_t>(max_color) + 1, 0);
    std::vector<int> sc(static_cast<std::size_t>(max_color) + 1, 0);
    for (Color c : guess)
        ++gc[static_cast<std::size_t>(c)];
    for (Color c : secret)
        ++sc[static_cast<std::size_t>(c)];
    int matches = 0;
    for (std::size_t c = 0; c < gc.size(); ++c)
        matches += std::min(gc[c], sc[c]);
    return matches - black_count(guess, secret);
}

ColorCensus color_histogram(const CodeVector &v, int num_colors, int lo, int hi)
{
    if (lo < 0 || hi >= static_cast<int>(v.size()) || lo > hi)
        throw DimensionError("color_histogram: range out of bounds");
    ColorCensus counts(static_cast<std::size_t>(num_colors), 0);
    for (int j = lo; j <= hi; ++j) {
        Color c = v[static_cast<std::size_t>(j)];
        if (c < 0 || c >= num_colors)
            throw DimensionError("color_histogram: color outside palette");
        ++counts[static_cast<std::size_t>(c)];
    }
    return counts;
}

} // namespace mastermind
