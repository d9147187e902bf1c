#include "mastermind/reduction.hpp"

#include <algorithm>
#include <cstdint>

namespace mastermind {

void ThreeDmInstance::validate() const
{
    if (n < 1 || triples.empty())
        throw MalformedInstance("3DM instance needs n >= 1 and m >= 1");
    for (const ThreeDmTriple &t : triples)
        if (t.x < 1 || t.x > n || t.y < 1 || t.y > n || t.z < 1 || t.z > n)
            throw MalformedInstance("3DM triple index outside [1, n]");
}

SatInstance reduce_to_sat(const ThreeDmInstance &tdm)
{
    tdm.validate();
    const int n = tdm.n;
    const int m = tdm.num_triples();
    if (m < n)
        throw MalformedInstance(
            "3DM instance with m < n has no perfect matching; its enforcer "
            "score would be negative");

    SatInstance inst;
    inst.length = 3 * n + m;
    inst.num_colors = m + 2;
    const std::size_t length = static_cast<std::size_t>(inst.length);
    const auto t_pos = [n](int s) { return static_cast<std::size_t>(3 * n + s - 1); };

    // Enforcers: no null color anywhere; exactly n chosen and m-n
    // unchosen triples.
    inst.constraints.push_back({CodeVector(length, kNullColor), 0});

    CodeVector chosen_probe(length, kNullColor);
    for (int s = 1; s <= m; ++s)
        chosen_probe[t_pos(s)] = kTrueColor;
    inst.constraints.push_back({std::move(chosen_probe), n});

    CodeVector unchosen_probe(length, kNullColor);
    for (int s = 1; s <= m; ++s)
        unchosen_probe[t_pos(s)] = kFalseColor;
    inst.constraints.push_back({std::move(unchosen_probe), m - n});

    // Chooser gadget: per triple, three score-1 queries tying its
    // element positions to its color or its T-position to boolean-0.
    for (int s = 1; s <= m; ++s) {
        const ThreeDmTriple &t = tdm.triples[static_cast<std::size_t>(s - 1)];
        const int element_pos[3] = {t.x - 1, n + t.y - 1, 2 * n + t.z - 1};
        for (int part = 0; part < 3; ++part) {
            CodeVector q(length, kNullColor);
            q[static_cast<std::size_t>(element_pos[part])] = triple_color(s);
            q[t_pos(s)] = kFalseColor;
            inst.constraints.push_back({std::move(q), 1});
        }
    }
    return inst;
}

Matching extract_matching(const CodeVector &witness, const ThreeDmInstance &tdm)
{
    SatInstance inst = reduce_to_sat(tdm);
    if (!is_consistent(witness, inst))
        throw NotAWitness("vector does not satisfy the reduced instance");
    Matching matching;
    const int n = tdm.n;
    for (int s = 1; s <= tdm.num_triples(); ++s)
        if (witness[static_cast<std::size_t>(3 * n + s - 1)] == kTrueColor)
            matching.chosen.push_back(s);
    return matching;
}

std::optional<Matching> solve_3dm_bruteforce(const ThreeDmInstance &tdm)
{
    tdm.validate();
    const int n = tdm.n;
    const int m = tdm.num_triples();
    if (n > 8 || m > 16)
        throw TooLarge("solve_3dm_bruteforce: desk scale is n <= 8, m <= 16");
    if (m < n)
        return std::nullopt;

    // One bit per element of X, Y, Z; a perfect matching is n disjoint
    // triples, which then necessarily cover all 3n bits.
    std::vector<std::uint32_t> masks;
    masks.reserve(static_cast<std::size_t>(m));
    for (const ThreeDmTriple &t : tdm.triples)
        masks.push_back((1u << (t.x - 1)) | (1u << (n + t.y - 1)) |
                        (1u << (2 * n + t.z - 1)));

    std::vector<int> chosen;
    auto dfs = [&](auto &&self, int next, std::uint32_t covered) -> bool {
        if (static_cast<int>(chosen.size()) == n)
            return true;
        int needed = n - static_cast<int>(chosen.size());
        for (int s = next; s <= m - needed + 1; ++s) {
            std::uint32_t mask = masks[static_cast<std::size_t>(s - 1)];
            if (covered & mask)
                continue;
            chosen.push_back(s);
            if (self(self, s + 1, covered | mask))
                return true;
            chosen.pop_back();
        }
        return false;
    };
    if (dfs(dfs, 1, 0))
        return Matching{chosen};
    return std::nullopt;
}

bool verify_matching(const ThreeDmInstance &tdm, const Matching &matching)
{
    tdm.validate();
    const int n = tdm.n;
    if (static_cast<int>(matching.chosen.size()) != n)
        return false;
    std::vector<int> cover(static_cast<std::size_t>(3 * n), 0);
    for (int s : matching.chosen) {
        if (s < 1 || s > tdm.num_triples())
            throw DimensionError("verify_matching: triple index outside [1, m]");
        const ThreeDmTriple &t = tdm.triples[static_cast<std::size_t>(s - 1)];
        ++cover[static_cast<std::size_t>(t.x - 1)];
        ++cover[static_cast<std::size_t>(n + t.y - 1)];
        ++cover[static_cast<std::size_t>(2 * n + t.z - 1)];
    }
    return std::all_of(cover.begin(), cover.end(),
                       [](int c) { return c == 1; });
}

} // namespace mastermind
