#include "mastermind/oracle.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace mastermind {

HonestOracle::HonestOracle(CodeVector secret, int num_colors)
    : secret_(std::move(secret)), num_colors_(num_colors)
{
    for (Color c : secret_)
        if (c < 0 || c >= num_colors_)
            throw DimensionError("HonestOracle: secret color outside palette");
}

int HonestOracle::answer(const CodeVector &query)
{
    return black_count(query, secret_);
}

StreamOracle::StreamOracle(int length, int num_colors, std::istream &in,
                           std::ostream &prompt)
    : length_(length), num_colors_(num_colors), in_(in), prompt_(prompt)
{
}

int StreamOracle::answer(const CodeVector &query)
{
    prompt_ << "query:";
    for (Color c : query)
        prompt_ << ' ' << c;
    prompt_ << '\n';
    std::string line;
    for (;;) {
        prompt_ << "black-peg score [0.." << length_ << "]? " << std::flush;
        if (!std::getline(in_, line))
            throw InconsistentOracle("input stream closed before a score was given");
        std::istringstream iss(line);
        int score = 0;
        char trailing = 0;
        if (iss >> score && !(iss >> trailing) && score >= 0 && score <= length_)
            return score;
        prompt_ << "need an integer in [0, " << length_ << "]\n";
    }
}

RecordingOracle::RecordingOracle(Oracle &inner, std::ostream &log)
    : inner_(inner), log_(log)
{
}

int RecordingOracle::answer(const CodeVector &query)
{
    int score = inner_.answer(query);
    for (Color c : query)
        log_ << c << ' ';
    log_ << score << '\n';
    return score;
}

} // namespace mastermind
