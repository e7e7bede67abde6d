#pragma once

// Readers and writers for SNAP edge lists, MatrixMarket coordinate files and
// DIMACS10 (METIS) adjacency files.

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tricount/error.hpp"
#include "tricount/graph.hpp"

namespace tricount {

/// Pairs as read from disk: may hold duplicates, self-loops and both
/// orientations. build_graph does the cleaning.
struct RawEdgeList {
  std::optional<std::uint64_t> n_hint;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  std::vector<std::string> warnings;

  std::uint64_t vertex_count() const {
    std::uint64_t n = n_hint.value_or(0);
    for (const auto& [u, v] : pairs) n = std::max({n, u + 1, v + 1});
    return n;
  }
};

enum class GraphFormat { kSnap, kMatrixMarket, kDimacs10 };

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
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

inline std::optional<std::uint64_t> to_u64(std::string_view tok) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size()) return std::nullopt;
  return v;
}

inline std::uint64_t parse_u64(std::string_view tok, std::size_t line, const char* what) {
  auto v = to_u64(tok);
  if (!v) throw ParseError(line, std::string("expected non-negative integer ") + what + ", got '" +
                                     std::string(tok) + "'");
  return *v;
}

inline bool is_number(std::string_view tok) {
  if (tok.empty()) return false;
  double d = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), d);
  return ec == std::errc{} && p == tok.data() + tok.size();
}

inline std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

inline bool blank(std::string_view line) {
  return std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); });
}

}  // namespace detail

/// SNAP edge list: '#' comments, one "u v" pair per line. A "# Nodes: N"
/// comment, as SNAP writes it, raises n_hint to at least N so trailing
/// isolated vertices survive.
inline RawEdgeList parse_snap_edgelist(std::istream& in) {
  RawEdgeList raw;
  std::uint64_t n = 0;
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    std::string_view sv(line);
    if (detail::blank(sv)) continue;
    auto toks = detail::split_ws(sv);
    if (toks.front().front() == '#') {
      for (std::size_t i = 0; i + 1 < toks.size(); ++i)
        if (toks[i] == "Nodes:")
          if (auto v = detail::to_u64(toks[i + 1])) n = std::max(n, *v);
      continue;
    }
    if (toks.size() != 2)
      throw ParseError(lineno, "expected two vertex ids, found " + std::to_string(toks.size()) + " fields");
    const auto u = detail::parse_u64(toks[0], lineno, "source id");
    const auto v = detail::parse_u64(toks[1], lineno, "target id");
    if (u >= kMaxVertices || v >= kMaxVertices) throw ParseError(lineno, "vertex id exceeds 32-bit range");
    raw.pairs.emplace_back(u, v);
    n = std::max({n, u + 1, v + 1});
  }
  raw.n_hint = n;
  return raw;
}

/// MatrixMarket coordinate file; pattern, integer or real field (values are
/// ignored), general or symmetric. Indices are converted to 0-based.
inline RawEdgeList parse_matrix_market(std::istream& in) {
  RawEdgeList raw;
  std::string line;
  std::size_t lineno = 1;
  if (!std::getline(in, line)) throw UnsupportedFormatError("empty MatrixMarket stream");
  auto header = detail::split_ws(line);
  if (header.size() != 5 || detail::lower(header[0]) != "%%matrixmarket" ||
      detail::lower(header[1]) != "matrix")
    throw UnsupportedFormatError("missing '%%MatrixMarket matrix' header");
  const std::string layout = detail::lower(header[2]);
  const std::string field = detail::lower(header[3]);
  const std::string symmetry = detail::lower(header[4]);
  if (layout != "coordinate") throw UnsupportedFormatError("only coordinate layout is supported, got " + layout);
  if (field != "pattern" && field != "integer" && field != "real")
    throw UnsupportedFormatError("unsupported MatrixMarket field " + field);
  if (symmetry != "general" && symmetry != "symmetric")
    throw UnsupportedFormatError("unsupported MatrixMarket symmetry " + symmetry);
  const std::size_t fields = field == "pattern" ? 2 : 3;

  std::optional<std::uint64_t> rows;
  std::uint64_t entries = 0, seen = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view sv(line);
    if (detail::blank(sv) || detail::split_ws(sv).front().front() == '%') continue;
    auto toks = detail::split_ws(sv);
    if (!rows) {
      if (toks.size() != 3) throw ParseError(lineno, "size line needs 'rows cols entries'");
      rows = detail::parse_u64(toks[0], lineno, "row count");
      const auto cols = detail::parse_u64(toks[1], lineno, "column count");
      entries = detail::parse_u64(toks[2], lineno, "entry count");
      if (*rows != cols) throw UnsupportedFormatError("adjacency matrix must be square");
      if (*rows > kMaxVertices) throw ParseError(lineno, "matrix too large for 32-bit ids");
      raw.n_hint = rows;
      continue;
    }
    if (toks.size() != fields)
      throw ParseError(lineno, "expected " + std::to_string(fields) + " fields per entry");
    const auto i = detail::parse_u64(toks[0], lineno, "row index");
    const auto j = detail::parse_u64(toks[1], lineno, "column index");
    if (i == 0 || j == 0 || i > *rows || j > *rows)
      throw ParseError(lineno, "index (" + std::string(toks[0]) + ", " + std::string(toks[1]) +
                                   ") outside 1.." + std::to_string(*rows));
    if (fields == 3 && !detail::is_number(toks[2]))
      throw ParseError(lineno, "bad entry value '" + std::string(toks[2]) + "'");
    if (++seen > entries) throw ParseError(lineno, "more entries than declared");
    raw.pairs.emplace_back(i - 1, j - 1);
  }
  if (!rows) throw ParseError(lineno, "missing size line");
  if (seen < entries)
    throw ParseError(lineno, "expected " + std::to_string(entries) + " entries, found " + std::to_string(seen));
  return raw;
}

/// DIMACS10 / METIS adjacency file: "n m [fmt]" then one line per vertex
/// listing its 1-based neighbors. '%' lines are comments; a blank line is an
/// isolated vertex. Weighted variants (fmt other than 0) are rejected.
inline RawEdgeList parse_dimacs10(std::istream& in) {
  RawEdgeList raw;
  std::string line;
  std::size_t lineno = 0;
  std::optional<std::uint64_t> n;
  std::uint64_t declared_m = 0, vertex = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view sv(line);
    if (!sv.empty() && sv.front() == '%') continue;
    if (!n) {
      if (detail::blank(sv)) continue;
      auto toks = detail::split_ws(sv);
      if (toks.size() < 2 || toks.size() > 4) throw ParseError(lineno, "header needs 'n m [fmt [ncon]]'");
      n = detail::parse_u64(toks[0], lineno, "vertex count");
      declared_m = detail::parse_u64(toks[1], lineno, "edge count");
      if (*n > kMaxVertices) throw ParseError(lineno, "too many vertices for 32-bit ids");
      if (toks.size() >= 3 && detail::to_u64(toks[2]).value_or(1) != 0)
        throw UnsupportedFormatError("weighted METIS fmt '" + std::string(toks[2]) + "' is not supported");
      if (toks.size() == 4) throw UnsupportedFormatError("multi-constraint METIS files are not supported");
      raw.n_hint = n;
      continue;
    }
    if (vertex == *n) {
      if (detail::blank(sv)) continue;
      throw ParseError(lineno, "more adjacency lines than the declared " + std::to_string(*n) + " vertices");
    }
    for (auto tok : detail::split_ws(sv)) {
      const auto w = detail::parse_u64(tok, lineno, "neighbor id");
      if (w == 0 || w > *n)
        throw ParseError(lineno, "neighbor " + std::string(tok) + " outside 1.." + std::to_string(*n));
      raw.pairs.emplace_back(vertex, w - 1);
    }
    ++vertex;
  }
  if (!n) throw ParseError(lineno, "missing header line");
  if (vertex < *n)
    throw ParseError(lineno, "expected " + std::to_string(*n) + " adjacency lines, found " + std::to_string(vertex));
  if (raw.pairs.size() != 2 * declared_m)
    raw.warnings.push_back("declared " + std::to_string(declared_m) + " edges but listed " +
                           std::to_string(raw.pairs.size()) + " neighbor entries (expected twice the edge count)");
  return raw;
}

inline void write_snap_edgelist(const Graph& g, std::ostream& out) {
  out << "# Undirected graph\n# Nodes: " << g.num_vertices() << " Edges: " << g.num_edges() << "\n";
  for (auto [u, v] : g.undirected_edges()) out << u << '\t' << v << '\n';
}

/// Writes the strictly lower triangle as a symmetric pattern matrix.
inline void write_matrix_market(const Graph& g, std::ostream& out) {
  out << "%%MatrixMarket matrix coordinate pattern symmetric\n";
  out << g.num_vertices() << ' ' << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (VertexId u : g.vertices())
    for (VertexId v : g.neighbors(u))
      if (v < u) out << u + 1 << ' ' << v + 1 << '\n';
}

inline void write_dimacs10(const Graph& g, std::ostream& out) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (VertexId u : g.vertices()) {
    bool first = true;
    for (VertexId v : g.neighbors(u)) {
      out << (first ? "" : " ") << v + 1;
      first = false;
    }
    out << '\n';
  }
}

inline RawEdgeList parse_graph(std::istream& in, GraphFormat format) {
  switch (format) {
    case GraphFormat::kSnap: return parse_snap_edgelist(in);
    case GraphFormat::kMatrixMarket: return parse_matrix_market(in);
    case GraphFormat::kDimacs10: return parse_dimacs10(in);
  }
  throw UnsupportedFormatError("unknown format");
}

inline void write_graph(const Graph& g, std::ostream& out, GraphFormat format) {
  switch (format) {
    case GraphFormat::kSnap: return write_snap_edgelist(g, out);
    case GraphFormat::kMatrixMarket: return write_matrix_market(g, out);
    case GraphFormat::kDimacs10: return write_dimacs10(g, out);
  }
}

inline std::optional<GraphFormat> format_from_name(std::string_view name) {
  const std::string s = detail::lower(name);
  if (s == "snap") return GraphFormat::kSnap;
  if (s == "mtx" || s == "matrixmarket") return GraphFormat::kMatrixMarket;
  if (s == "dimacs10" || s == "metis") return GraphFormat::kDimacs10;
  return std::nullopt;
}

inline std::optional<GraphFormat> detect_format(const std::filesystem::path& path) {
  const std::string ext = detail::lower(path.extension().string());
  if (ext == ".txt" || ext == ".edges" || ext == ".el") return GraphFormat::kSnap;
  if (ext == ".mtx") return GraphFormat::kMatrixMarket;
  if (ext == ".graph" || ext == ".metis") return GraphFormat::kDimacs10;
  return std::nullopt;
}

struct LoadedGraph {
  Graph graph;
  std::vector<std::string> warnings;
};

/// Reads, parses and cleans a graph file. `format` overrides detection by
/// extension.
inline LoadedGraph load_graph(const std::filesystem::path& path, std::optional<GraphFormat> format = {}) {
  if (!format) format = detect_format(path);
  if (!format)
    throw UnsupportedFormatError("cannot infer format of '" + path.string() + "'; pass an explicit format");
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  RawEdgeList raw = parse_graph(in, *format);
  return {build_graph(raw.pairs, raw.vertex_count()), std::move(raw.warnings)};
}

}  // namespace tricount
