#include "mastermind/io.hpp"

#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>

namespace mastermind {

namespace {

// Integer tokens of one line with their 1-based starting columns.
struct Token {
    long long value;
    int column;
};

std::vector<Token> tokenize_ints(const std::string &line, int line_no)
{
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        std::string word = line.substr(start, i - start);
        std::size_t consumed = 0;
        long long value = 0;
        bool ok = true;
        try {
            value = std::stoll(word, &consumed);
        } catch (const std::exception &) {
            ok = false;
        }
        if (!ok || consumed != word.size())
            throw ParseError("expected an integer, got '" + word + "'", line_no,
                             static_cast<int>(start) + 1);
        tokens.push_back({value, static_cast<int>(start) + 1});
    }
    return tokens;
}

// Reads the next content line (skipping blanks and '#' comments).
bool next_content_line(std::istream &in, std::string &line, int &line_no)
{
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t i = 0;
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        if (i == line.size() || line[i] == '#')
            continue;
        return true;
    }
    return false;
}

} // namespace

SatInstance parse_sat_instance(std::istream &in)
{
    SatInstance inst;
    std::string line;
    int line_no = 0;

    if (!next_content_line(in, line, line_no))
        throw ParseError("missing 'N K' header", line_no + 1, 1);
    auto header = tokenize_ints(line, line_no);
    if (header.size() != 2)
        throw ParseError("header must be exactly 'N K'", line_no,
                         header.empty() ? 1 : header.back().column);
    if (header[0].value < 0 || header[1].value < 0)
        throw ParseError("N and K must be non-negative", line_no, header[0].column);
    inst.length = static_cast<int>(header[0].value);
    inst.num_colors = static_cast<int>(header[1].value);

    while (next_content_line(in, line, line_no)) {
        auto tokens = tokenize_ints(line, line_no);
        if (static_cast<int>(tokens.size()) != inst.length + 1)
            throw ParseError("constraint line needs " +
                                 std::to_string(inst.length) +
                                 " colors and one score",
                             line_no, tokens.empty() ? 1 : tokens.back().column);
        SatConstraint constraint;
        constraint.guess.reserve(static_cast<std::size_t>(inst.length));
        for (int j = 0; j < inst.length; ++j) {
            const Token &t = tokens[static_cast<std::size_t>(j)];
            if (t.value < 0 || t.value >= inst.num_colors)
                throw ParseError("color outside [0, K)", line_no, t.column);
            constraint.guess.push_back(static_cast<Color>(t.value));
        }
        const Token &score = tokens.back();
        if (score.value < 0 || score.value > inst.length)
            throw ParseError("score outside [0, N]", line_no, score.column);
        constraint.score = static_cast<int>(score.value);
        inst.constraints.push_back(std::move(constraint));
    }
    return inst;
}

SatInstance parse_sat_instance(const std::string &text)
{
    std::istringstream iss(text);
    return parse_sat_instance(iss);
}

void write_sat_instance(std::ostream &out, const SatInstance &inst,
                        const std::vector<std::string> &header_comments)
{
    for (const std::string &comment : header_comments)
        out << "# " << comment << '\n';
    out << inst.length << ' ' << inst.num_colors << '\n';
    for (const SatConstraint &c : inst.constraints) {
        for (Color color : c.guess)
            out << color << ' ';
        out << c.score << '\n';
    }
}

ThreeDmInstance parse_3dm_instance(std::istream &in)
{
    ThreeDmInstance tdm;
    std::string line;
    int line_no = 0;

    if (!next_content_line(in, line, line_no))
        throw ParseError("missing 'n m' header", line_no + 1, 1);
    auto header = tokenize_ints(line, line_no);
    if (header.size() != 2)
        throw ParseError("header must be exactly 'n m'", line_no,
                         header.empty() ? 1 : header.back().column);
    if (header[0].value < 1 || header[1].value < 1)
        throw ParseError("need n >= 1 and m >= 1", line_no, header[0].column);
    tdm.n = static_cast<int>(header[0].value);
    const long long m = header[1].value;

    while (next_content_line(in, line, line_no)) {
        auto tokens = tokenize_ints(line, line_no);
        if (tokens.size() != 3)
            throw ParseError("triple line must be 'i j k'", line_no,
                             tokens.empty() ? 1 : tokens.back().column);
        for (const Token &t : tokens)
            if (t.value < 1 || t.value > tdm.n)
                throw ParseError("triple index outside [1, n]", line_no, t.column);
        tdm.triples.push_back({static_cast<int>(tokens[0].value),
                               static_cast<int>(tokens[1].value),
                               static_cast<int>(tokens[2].value)});
    }
    if (tdm.num_triples() != m)
        throw ParseError("expected " + std::to_string(m) + " triples, got " +
                             std::to_string(tdm.num_triples()),
                         line_no, 1);
    return tdm;
}

ThreeDmInstance parse_3dm_instance(const std::string &text)
{
    std::istringstream iss(text);
    return parse_3dm_instance(iss);
}

void write_3dm_instance(std::ostream &out, const ThreeDmInstance &tdm)
{
    out << tdm.n << ' ' << tdm.num_triples() << '\n';
    for (const ThreeDmTriple &t : tdm.triples)
        out << t.x << ' ' << t.y << ' ' << t.z << '\n';
}

std::string format_colors(const CodeVector &v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(v[i]);
    }
    return s;
}

CodeVector parse_colors(const std::string &text)
{
    CodeVector v;
    std::size_t i = 0;
    while (i <= text.size()) {
        std::size_t comma = text.find(',', i);
        if (comma == std::string::npos)
            comma = text.size();
        std::string word = text.substr(i, comma - i);
        std::size_t consumed = 0;
        long long value = 0;
        bool ok = !word.empty();
        if (ok) {
            try {
                value = std::stoll(word, &consumed);
            } catch (const std::exception &) {
                ok = false;
            }
        }
        if (!ok || consumed != word.size() || value < 0)
            throw ParseError("expected a non-negative integer color, got '" +
                                 word + "'",
                             1, static_cast<int>(i) + 1);
        v.push_back(static_cast<Color>(value));
        i = comma + 1;
        if (comma == text.size())
            break;
    }
    return v;
}

} // namespace mastermind
