#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "chromabound/graph.hpp"

namespace chromabound {

/// Reads a DIMACS `.col` graph: `c` comments, one `p edge <n> <m>` line, then
/// 1-indexed `e <u> <v>` lines. A mismatch between the declared and actual edge
/// count is reported through `warnings` rather than thrown.
///
/// Throws ParseError naming the offending line.
Graph parse_dimacs(std::istream& in, std::vector<std::string>* warnings = nullptr);
Graph parse_dimacs(std::string_view text, std::vector<std::string>* warnings = nullptr);
Graph read_dimacs_file(const std::string& path, std::vector<std::string>* warnings = nullptr);

void write_dimacs(const Graph& g, std::ostream& out, std::string_view comment = {});
std::string to_dimacs(const Graph& g, std::string_view comment = {});

}  // namespace chromabound
