#pragma once

#include <iosfwd>
#include <string_view>

#include "sparsity/graph.hpp"

namespace sparsity {

// Edge-list text format:
//
//   # comment lines start with '#'
//   n m
//   u v        (m lines, 0-based vertex ids)
//
// Blank lines are ignored. Errors are reported as ParseError with a line number.

Multigraph parse_graph(std::istream& in);
Multigraph parse_graph(std::string_view text);

void write_graph(std::ostream& out, const Multigraph& g);

}  // namespace sparsity
