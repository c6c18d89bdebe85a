#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "dissrho/graph.hpp"

namespace dissrho {

/// Decodes one graph6 record (no trailing newline). An optional ">>graph6<<" prefix is accepted.
/// Throws ParseError naming the byte offset of the first offending byte.
Graph from_graph6(std::string_view text);

std::string to_graph6(const Graph& g);

/// Newline-delimited graph6 files. Blank lines are skipped; errors report the line number.
std::vector<Graph> read_graph6_lines(std::istream& in);
void write_graph6_lines(std::ostream& out, const std::vector<Graph>& graphs);

}  // namespace dissrho
