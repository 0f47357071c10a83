#pragma once

#include <cstddef>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "kout/error.hpp"
#include "kout/graph.hpp"

namespace kout {

/*
 * Edge-list text format:
 *
 *   n e          header: vertex count, edge count
 *   u v          e lines, 0-based ids, one undirected edge each
 *
 * Tokens are whitespace-delimited; '#' starts a comment that runs to the end
 * of the line; blank lines are ignored. Errors report the 1-based line
 * number in Error::detail().
 */
inline Graph read_edge_list(std::string_view text) {
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t n = 0;
  std::size_t expected = 0;
  std::vector<Edge> edges;
  std::set<Edge> seen;

  auto fail = [&](ErrorCode code, const std::string& msg) -> Error {
    return Error(code, "line " + std::to_string(line_no) + ": " + msg, line_no);
  };

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::istringstream in{std::string(line)};
    std::vector<std::string> tokens;
    for (std::string tok; in >> tok;) tokens.push_back(tok);
    if (tokens.empty()) continue;
    if (tokens.size() != 2) throw fail(ErrorCode::ParseError, "expected two integers");

    std::size_t a = 0;
    std::size_t b = 0;
    try {
      std::size_t used = 0;
      if (tokens[0][0] == '-' || tokens[1][0] == '-') throw std::invalid_argument("negative");
      a = std::stoull(tokens[0], &used);
      if (used != tokens[0].size()) throw std::invalid_argument("trailing");
      b = std::stoull(tokens[1], &used);
      if (used != tokens[1].size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw fail(ErrorCode::ParseError, "non-integer token");
    }

    if (!have_header) {
      n = a;
      expected = b;
      have_header = true;
      continue;
    }
    if (edges.size() == expected) throw fail(ErrorCode::ParseError, "more edges than declared");
    if (a >= n || b >= n) throw fail(ErrorCode::ParseError, "vertex id out of range");
    if (a == b) throw fail(ErrorCode::SelfLoop, "self-loop at " + std::to_string(a));
    Edge e{static_cast<VertexId>(std::min(a, b)), static_cast<VertexId>(std::max(a, b))};
    if (!seen.insert(e).second) {
      throw fail(ErrorCode::DuplicateEdge,
                 "duplicate edge {" + std::to_string(e.first) + "," + std::to_string(e.second) + "}");
    }
    edges.push_back(e);
  }
  if (!have_header) throw fail(ErrorCode::ParseError, "missing header");
  if (edges.size() != expected) {
    throw fail(ErrorCode::ParseError, "declared " + std::to_string(expected) + " edges, found " +
                                          std::to_string(edges.size()));
  }
  return Graph::from_edges(n, edges, /*strict=*/true);
}

/// Canonical form: header, then edges (u < v) in lexicographic order.
inline std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

inline Graph load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return read_edge_list(buf.str());
}

inline void save_edge_list(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
  out << write_edge_list(g);
  if (!out) throw Error(ErrorCode::IoError, "write failed for " + path);
}

}  // namespace kout
