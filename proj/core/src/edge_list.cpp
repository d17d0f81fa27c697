#include "cliquelist/edge_list.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>
#include <vector>

namespace cliquelist {
namespace {

// Parses exactly `count` unsigned decimal fields separated by single spaces.
template <std::size_t N>
bool parse_fields(std::string_view line, std::uint64_t (&fields)[N]) {
  const char* p = line.data();
  const char* end = line.data() + line.size();
  for (std::size_t i = 0; i < N; ++i) {
    if (i > 0) {
      if (p == end || *p != ' ') return false;
      ++p;
    }
    auto [next, ec] = std::from_chars(p, end, fields[i]);
    if (ec != std::errc{} || next == p) return false;
    p = next;
  }
  return p == end;
}

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
  throw GraphError("edge list line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::vector<Edge> edges;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') fail(line_no, "CR line endings are not accepted");
    if (!line.empty() && line.front() == '#') continue;

    if (!have_header) {
      std::uint64_t header[2];
      if (!parse_fields(line, header)) fail(line_no, "expected header 'n m'");
      n = header[0];
      m = header[1];
      if (n > UINT32_MAX) fail(line_no, "vertex count too large");
      have_header = true;
      edges.reserve(m);
      continue;
    }

    std::uint64_t uv[2];
    if (!parse_fields(line, uv)) fail(line_no, "expected edge 'u v'");
    if (edges.size() == m) fail(line_no, "more edge lines than declared m=" + std::to_string(m));
    if (uv[0] >= n || uv[1] >= n) {
      fail(line_no, "vertex id out of range in pair (" + std::to_string(uv[0]) + "," +
                        std::to_string(uv[1]) + ")");
    }
    edges.emplace_back(static_cast<Vertex>(uv[0]), static_cast<Vertex>(uv[1]));
  }

  if (!have_header) throw GraphError("edge list is empty: missing header 'n m'");
  if (edges.size() != m) {
    throw GraphError("edge list declares m=" + std::to_string(m) + " but has " +
                     std::to_string(edges.size()) + " edge lines");
  }
  return build_graph(static_cast<std::size_t>(n), edges);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GraphError("cannot open '" + path + "'");
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << to_edge_list_string(g);
}

std::string to_edge_list_string(const Graph& g) {
  std::string s;
  s += std::to_string(g.num_vertices());
  s += ' ';
  s += std::to_string(g.num_edges());
  s += '\n';
  for (auto [u, v] : g.edges()) {
    s += std::to_string(u);
    s += ' ';
    s += std::to_string(v);
    s += '\n';
  }
  return s;
}

}  // namespace cliquelist
