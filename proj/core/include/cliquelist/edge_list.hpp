#pragma once

#include <iosfwd>
#include <string>

#include "cliquelist/graph.hpp"

namespace cliquelist {

// Edge-list text format:
//
//   n m
//   u v        (m lines, 0 <= u < v < n)
//
// ASCII decimal, single spaces, LF line endings. Lines starting with '#' are
// comments. The reader also accepts u > v and collapses duplicate pairs; the
// writer always emits u < v in lexicographic order.

Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

void write_edge_list(std::ostream& out, const Graph& g);
std::string to_edge_list_string(const Graph& g);

}  // namespace cliquelist
