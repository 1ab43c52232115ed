#include "nutgraph/construction.hpp"

namespace nutgraph {
namespace {

std::size_t mod(long long x, std::size_t n) {
  const auto sn = static_cast<long long>(n);
  return static_cast<std::size_t>(((x % sn) + sn) % sn);
}

// K_5 on 0..4; Γ2 is the Petersen graph (outer 5-cycle a, inner pentagram b)
// blown up by K_3. Vertex (ring, i, j) sits at 5 + 15*ring + 3*i + j.
MultiGraph figure3() {
  MultiGraph g(35);
  auto at = [](int ring, long long i, std::size_t j) { return 5 + 15 * ring + 3 * mod(i, 5) + j; };
  for (std::size_t x = 0; x < 5; ++x) {
    for (std::size_t y = x + 1; y < 5; ++y) g.add_edge(x, y);
  }
  for (long long i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      for (std::size_t k = 0; k < 3; ++k) {
        if (j == k) continue;
        g.add_edge(at(0, i, j), at(0, i + 1, k));
        g.add_edge(at(1, i, j), at(1, i + 2, k));
        g.add_edge(at(0, i, j), at(1, i, k));
      }
    }
    for (std::size_t j = 0; j < 3; ++j) {
      const auto v = static_cast<std::size_t>(i);
      g.add_edge(v, at(0, i + 1, j));
      g.add_edge(v, at(0, i - 1, j));
      g.add_edge(v, at(1, i + 2, j));
      g.add_edge(v, at(1, i - 2, j));
    }
  }
  return g;
}

// K_7 on 0..6 plus four K_7 layers; layer x vertex i sits at 7 + 7*x + i.
// offsets[x] lists the positions i + o joined to vertex i of Γ1.
MultiGraph figure4(const std::vector<std::vector<long long>>& offsets) {
  MultiGraph g(35);
  for (std::size_t layer = 0; layer < 5; ++layer) {
    for (std::size_t x = 0; x < 7; ++x) {
      for (std::size_t y = x + 1; y < 7; ++y) g.add_edge(7 * layer + x, 7 * layer + y);
    }
  }
  for (std::size_t layer = 0; layer < offsets.size(); ++layer) {
    for (long long i = 0; i < 7; ++i) {
      for (long long o : offsets[layer]) g.add_edge(static_cast<std::size_t>(i), 7 + 7 * layer + mod(i + o, 7));
    }
  }
  return g;
}

}  // namespace

std::optional<GalleryId> parse_gallery_id(std::string_view name) {
  if (name == "fig3") return GalleryId::fig3;
  if (name == "fig4_left") return GalleryId::fig4_left;
  if (name == "fig4_right") return GalleryId::fig4_right;
  return std::nullopt;
}

std::string to_string(GalleryId id) {
  switch (id) {
    case GalleryId::fig3:
      return "fig3";
    case GalleryId::fig4_left:
      return "fig4_left";
    case GalleryId::fig4_right:
      return "fig4_right";
  }
  return "?";
}

GalleryGraph gallery(GalleryId id) {
  GalleryGraph out;
  std::size_t n1 = 0;
  switch (id) {
    case GalleryId::fig3:
      out.graph = figure3();
      n1 = 5;
      break;
    case GalleryId::fig4_left:
      out.graph = figure4({{-1, 0, 2}, {-1, 0, 2}, {-1, 0, 2}, {-1, 0, 2}});
      n1 = 7;
      break;
    case GalleryId::fig4_right:
      // layers a_l, a_r, b_l, b_r
      out.graph = figure4({{1, -1, -2}, {1, -1, -2}, {1, 2, -1}, {1, 2, -1}});
      n1 = 7;
      break;
  }
  out.partition = Bipartition::prefix(out.graph.order(), n1);
  out.tuple = extract_tuple(out.graph, out.partition);
  return out;
}

}  // namespace nutgraph
