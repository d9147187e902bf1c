// io.hpp -- plain-text formats for instances, transcripts, and vectors
//
// SatInstance format: first content line "N K"; each following content
// line is N space-separated colors and then the score. Lines starting
// with '#' are comments; blank lines are skipped.
//
// 3DM format: first content line "n m", then m lines "i j k" (1-based).

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mastermind/reduction.hpp"
#include "mastermind/sat.hpp"

namespace mastermind {

SatInstance parse_sat_instance(std::istream &in);
SatInstance parse_sat_instance(const std::string &text);

/// Serializes the instance; each entry of header_comments becomes a
/// leading '#' line.
void write_sat_instance(std::ostream &out, const SatInstance &inst,
                        const std::vector<std::string> &header_comments = {});

ThreeDmInstance parse_3dm_instance(std::istream &in);
ThreeDmInstance parse_3dm_instance(const std::string &text);

void write_3dm_instance(std::ostream &out, const ThreeDmInstance &tdm);

/// "1,0,1,0"
std::string format_colors(const CodeVector &v);

/// Parses a comma-separated color list; throws ParseError on bad input.
CodeVector parse_colors(const std::string &text);

} // namespace mastermind
