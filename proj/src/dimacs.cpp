#include "chromabound/dimacs.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include "chromabound/errors.hpp"

namespace chromabound {
namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::size_t parse_count(std::string_view tok, std::size_t line_no, const char* what) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line_no, std::string("expected non-negative integer for ") + what + ", got '" +
                                  std::string(tok) + "'");
  }
  return value;
}

}  // namespace

Graph parse_dimacs(std::istream& in, std::vector<std::string>* warnings) {
  std::optional<std::size_t> n;
  std::size_t declared_edges = 0;
  std::vector<Edge> edges;
  std::string line;
  std::size_t line_no = 0;

  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = split_ws(line);
    if (tokens.empty() || tokens[0] == "c") continue;

    if (tokens[0] == "p") {
      if (n) throw ParseError(line_no, "duplicate 'p' line");
      if (tokens.size() != 4 || (tokens[1] != "edge" && tokens[1] != "col")) {
        throw ParseError(line_no, "expected 'p edge <n> <m>'");
      }
      n = parse_count(tokens[2], line_no, "vertex count");
      declared_edges = parse_count(tokens[3], line_no, "edge count");
      if (*n == 0) throw ParseError(line_no, "vertex count must be positive");
    } else if (tokens[0] == "e") {
      if (!n) throw ParseError(line_no, "'e' line before 'p' line");
      if (tokens.size() != 3) throw ParseError(line_no, "expected 'e <u> <v>'");
      std::size_t u = parse_count(tokens[1], line_no, "endpoint");
      std::size_t v = parse_count(tokens[2], line_no, "endpoint");
      if (u < 1 || u > *n || v < 1 || v > *n) {
        throw ParseError(line_no, "vertex index out of range [1, " + std::to_string(*n) + "]");
      }
      if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
      edges.push_back({u - 1, v - 1});
    } else {
      throw ParseError(line_no, "unrecognized line type '" + std::string(tokens[0]) + "'");
    }
  }
  if (!n) throw ParseError(0, "missing 'p edge <n> <m>' line");

  Graph g(*n, edges);
  if (warnings && g.edge_count() != declared_edges) {
    warnings->push_back("declared " + std::to_string(declared_edges) + " edges, found " +
                        std::to_string(g.edge_count()) + " distinct");
  }
  return g;
}

Graph parse_dimacs(std::string_view text, std::vector<std::string>* warnings) {
  std::istringstream in{std::string(text)};
  return parse_dimacs(in, warnings);
}

Graph read_dimacs_file(const std::string& path, std::vector<std::string>* warnings) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return parse_dimacs(in, warnings);
}

void write_dimacs(const Graph& g, std::ostream& out, std::string_view comment) {
  if (!comment.empty()) out << "c " << comment << '\n';
  out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
}

std::string to_dimacs(const Graph& g, std::string_view comment) {
  std::ostringstream out;
  write_dimacs(g, out, comment);
  return out.str();
}

}  // namespace chromabound
