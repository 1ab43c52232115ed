#include "nutgraph/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace nutgraph {
namespace {

bool skippable(const std::string& line) {
  auto first = line.find_first_not_of(" \t\r");
  return first == std::string::npos || line[first] == '#';
}

}  // namespace

MultiGraph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::optional<MultiGraph> g;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    std::istringstream fields(line);
    if (!g) {
      std::string keyword;
      long long order = -1;
      std::string extra;
      if (!(fields >> keyword >> order) || keyword != "order" || order < 1 || (fields >> extra)) {
        throw FormatError("line " + std::to_string(line_no) + ": expected header 'order N'");
      }
      g.emplace(static_cast<std::size_t>(order));
      continue;
    }
    long long u = -1;
    long long v = -1;
    std::string extra;
    if (!(fields >> u >> v) || (fields >> extra)) {
      throw FormatError("line " + std::to_string(line_no) + ": expected 'u v'");
    }
    const auto n = static_cast<long long>(g->order());
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw FormatError("line " + std::to_string(line_no) + ": vertex out of range");
    }
    g->add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
  }
  if (!g) throw FormatError("missing 'order N' header");
  return std::move(*g);
}

MultiGraph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const MultiGraph& g) {
  out << "order " << g.order() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

std::string to_graph6(const MultiGraph& g) {
  if (g.has_loops()) throw std::invalid_argument("graph6 cannot encode loops");
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  } else {
    out.append(2, static_cast<char>(126));
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }
  // Upper triangle, column by column, six bits per character.
  int value = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      value = (value << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + value));
        value = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (value << (6 - filled))));
  return out;
}

}  // namespace nutgraph
