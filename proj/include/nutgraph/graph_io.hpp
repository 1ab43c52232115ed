#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "nutgraph/graph.hpp"

namespace nutgraph {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Edge-list text format:
///
///     order N
///     u v
///     ...
///
/// one line per edge with 0-based vertices, a loop written "u u". Blank lines
/// and lines starting with '#' are ignored. Throws FormatError.
MultiGraph read_edge_list(std::istream& in);
MultiGraph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const MultiGraph& g);

/// graph6 encoding (no trailing newline). Throws std::invalid_argument for
/// graphs with loops.
std::string to_graph6(const MultiGraph& g);

}  // namespace nutgraph
