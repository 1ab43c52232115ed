#include "nutgraph/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <string>

#include "nutgraph/number_theory.hpp"
#include "nutgraph/simd/kernels.hpp"

namespace nutgraph {

MultiGraph::MultiGraph(std::size_t order)
    : order_(order), words_((order + 63) / 64), bits_(order * ((order + 63) / 64), 0) {}

void MultiGraph::add_edge(std::size_t u, std::size_t v) {
  if (u >= order_ || v >= order_) throw std::out_of_range("add_edge: vertex out of range");
  bits_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
  bits_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
}

std::size_t MultiGraph::valence(std::size_t v) const {
  std::size_t total = 0;
  for (std::uint64_t w : row_bits(v)) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::vector<std::size_t> MultiGraph::neighbors(std::size_t v) const {
  std::vector<std::size_t> out;
  auto row = row_bits(v);
  for (std::size_t w = 0; w < words_; ++w) {
    std::uint64_t bits = row[w];
    while (bits != 0) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

bool MultiGraph::has_loops() const {
  for (std::size_t v = 0; v < order_; ++v) {
    if (adjacent(v, v)) return true;
  }
  return false;
}

bool MultiGraph::loops_only() const {
  if (order_ == 0) return false;
  for (std::size_t v = 0; v < order_; ++v) {
    if (!adjacent(v, v) || valence(v) != 1) return false;
  }
  return true;
}

std::size_t MultiGraph::edge_count() const {
  std::size_t twice = 0;
  std::size_t loop_count = 0;
  for (std::size_t v = 0; v < order_; ++v) {
    twice += valence(v);
    if (adjacent(v, v)) ++loop_count;
  }
  return (twice - loop_count) / 2 + loop_count;
}

std::vector<std::pair<std::size_t, std::size_t>> MultiGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < order_; ++u) {
    for (std::size_t v : neighbors(u)) {
      if (u <= v) out.emplace_back(u, v);
    }
  }
  return out;
}

IntMatrix MultiGraph::adjacency_matrix() const {
  IntMatrix a(order_, order_);
  for (std::size_t u = 0; u < order_; ++u) {
    for (std::size_t v : neighbors(u)) a(u, v) = 1;
  }
  return a;
}

void MultiGraph::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != order_) {
    throw std::invalid_argument("set_labels: one label per vertex required");
  }
  labels_ = std::move(labels);
}

MultiGraph cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle: order must be at least 3");
  MultiGraph g(n);
  for (std::size_t i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

MultiGraph complete(std::size_t n) {
  if (n < 1) throw std::invalid_argument("complete: order must be at least 1");
  MultiGraph g(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) g.add_edge(i, j);
  }
  return g;
}

MultiGraph loops(std::size_t n) {
  if (n < 1) throw std::invalid_argument("loops: order must be at least 1");
  MultiGraph g(n);
  for (std::size_t i = 0; i < n; ++i) g.add_edge(i, i);
  return g;
}

MultiGraph circulant(std::size_t n, const std::vector<std::int64_t>& connection_set) {
  if (n < 1) throw std::invalid_argument("circulant: order must be positive");
  const auto sn = static_cast<std::int64_t>(n);
  std::vector<bool> in_set(n, false);
  for (std::int64_t s : connection_set) in_set[static_cast<std::size_t>(((s % sn) + sn) % sn)] = true;
  if (in_set[0]) throw std::invalid_argument("circulant: 0 in connection set");
  for (std::size_t s = 1; s < n; ++s) {
    if (in_set[s] != in_set[n - s]) throw std::invalid_argument("circulant: connection set not symmetric");
  }
  MultiGraph g(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t s = 1; s < n; ++s) {
      if (in_set[s]) g.add_edge(i, (i + s) % n);
    }
  }
  return g;
}

std::uint64_t smallest_primitive_root(std::uint64_t p) {
  if (p < 3 || !is_prime_u64(p)) throw std::invalid_argument("smallest_primitive_root: p must be an odd prime");
  std::vector<std::uint64_t> prime_factors;
  std::uint64_t rest = p - 1;
  for (std::uint64_t q = 2; q * q <= rest; ++q) {
    if (rest % q == 0) {
      prime_factors.push_back(q);
      while (rest % q == 0) rest /= q;
    }
  }
  if (rest > 1) prime_factors.push_back(rest);
  for (std::uint64_t g = 2; g < p; ++g) {
    bool primitive = std::all_of(prime_factors.begin(), prime_factors.end(),
                                 [&](std::uint64_t q) { return pow_mod(g, (p - 1) / q, p) != 1; });
    if (primitive) return g;
  }
  throw std::logic_error("no primitive root found");
}

std::vector<std::int64_t> multiplicative_subgroup(std::uint64_t p, std::uint64_t d) {
  if (p < 3 || !is_prime_u64(p)) throw std::invalid_argument("subgroup_circulant: p must be an odd prime");
  if (d == 0 || d % 2 != 0) throw std::invalid_argument("subgroup_circulant: d must be even");
  if ((p - 1) % d != 0) throw std::invalid_argument("subgroup_circulant: d must divide p-1");
  const std::uint64_t generator = pow_mod(smallest_primitive_root(p), (p - 1) / d, p);
  std::vector<std::int64_t> out;
  std::uint64_t x = 1;
  for (std::uint64_t k = 0; k < d; ++k) {
    out.push_back(static_cast<std::int64_t>(x));
    x = mul_mod(x, generator, p);
  }
  return out;
}

MultiGraph subgroup_circulant(std::uint64_t p, std::uint64_t d) {
  return circulant(static_cast<std::size_t>(p), multiplicative_subgroup(p, d));
}

MultiGraph kronecker(const MultiGraph& g1, const MultiGraph& g2) {
  const std::size_t n2 = g2.order();
  MultiGraph g(g1.order() * n2);
  std::vector<std::vector<std::size_t>> nb2(n2);
  for (std::size_t u2 = 0; u2 < n2; ++u2) nb2[u2] = g2.neighbors(u2);
  for (std::size_t u1 = 0; u1 < g1.order(); ++u1) {
    for (std::size_t v1 : g1.neighbors(u1)) {
      if (v1 < u1) continue;
      for (std::size_t u2 = 0; u2 < n2; ++u2) {
        for (std::size_t v2 : nb2[u2]) g.add_edge(u1 * n2 + u2, v1 * n2 + v2);
      }
    }
  }
  return g;
}

MultiGraph disjoint_union(const MultiGraph& g1, const MultiGraph& g2) {
  const std::size_t n1 = g1.order();
  MultiGraph g(n1 + g2.order());
  for (auto [u, v] : g1.edges()) g.add_edge(u, v);
  for (auto [u, v] : g2.edges()) g.add_edge(n1 + u, n1 + v);
  return g;
}

MultiGraph union_graph(const MultiGraph& g1, const MultiGraph& g2) {
  if (g1.order() != g2.order()) throw std::invalid_argument("union_graph: order mismatch");
  MultiGraph g = g1;
  for (std::size_t v = 0; v < g.order(); ++v) {
    auto dst = g.row_bits(v);
    auto src = g2.row_bits(v);
    for (std::size_t w = 0; w < dst.size(); ++w) dst[w] |= src[w];
  }
  return g;
}

namespace {

// BFS 2-colouring; returns the number of vertices reached from `start` and
// clears `bipartite` if an odd closed walk is found.
std::size_t bfs_component(const MultiGraph& g, std::size_t start, std::vector<int>& colour,
                          bool& bipartite) {
  std::deque<std::size_t> queue{start};
  colour[start] = 0;
  std::size_t reached = 1;
  while (!queue.empty()) {
    std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t v : g.neighbors(u)) {
      if (colour[v] < 0) {
        colour[v] = 1 - colour[u];
        ++reached;
        queue.push_back(v);
      } else if (colour[v] == colour[u]) {
        bipartite = false;
      }
    }
  }
  return reached;
}

// Vertices reachable from 0 in a digraph given by bit-packed out-rows.
std::size_t reach_count(const std::vector<std::uint64_t>& rows, std::size_t n, std::size_t words) {
  std::vector<bool> seen(n, false);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!queue.empty()) {
    std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t bits = rows[u * words + w];
      while (bits != 0) {
        std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        bits &= bits - 1;
        if (!seen[v]) {
          seen[v] = true;
          ++count;
          queue.push_back(v);
        }
      }
    }
  }
  return count;
}

}  // namespace

bool is_connected(const MultiGraph& g) {
  if (g.order() == 0) return false;
  std::vector<int> colour(g.order(), -1);
  bool bipartite = true;
  return bfs_component(g, 0, colour, bipartite) == g.order();
}

bool is_bipartite(const MultiGraph& g) {
  std::vector<int> colour(g.order(), -1);
  bool bipartite = true;
  for (std::size_t v = 0; v < g.order() && bipartite; ++v) {
    if (colour[v] < 0) bfs_component(g, v, colour, bipartite);
  }
  return bipartite;
}

GraphStats stats(const MultiGraph& g) {
  GraphStats s;
  s.connected = is_connected(g);
  s.bipartite = is_bipartite(g);
  for (std::size_t v = 0; v < g.order(); ++v) ++s.degree_multiset[g.valence(v)];
  s.regular = s.degree_multiset.size() == 1;
  return s;
}

bool product_irreducible(const MultiGraph& g1, const MultiGraph& g2) {
  if (g1.order() != g2.order()) throw std::invalid_argument("product_irreducible: order mismatch");
  const std::size_t n = g1.order();
  if (n == 0) return false;
  const std::size_t words = g1.words_per_row();
  const auto& kernels = simd::active();
  // Arc i -> j iff row i of A1 meets column j of A2 (= row j, A2 symmetric).
  std::vector<std::uint64_t> forward(n * words, 0);
  std::vector<std::uint64_t> backward(n * words, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (kernels.and_popcount(g1.row_bits(i).data(), g2.row_bits(j).data(), words) != 0) {
        forward[i * words + j / 64] |= std::uint64_t{1} << (j % 64);
        backward[j * words + i / 64] |= std::uint64_t{1} << (i % 64);
      }
    }
  }
  return reach_count(forward, n, words) == n && reach_count(backward, n, words) == n;
}

bool is_nonsingular(const MultiGraph& g) {
  const IntMatrix a = g.adjacency_matrix();
  if (rank_mod_p(a, kDefaultCertificatePrime) == g.order()) return true;
  return rank_rational(a) == g.order();
}

}  // namespace nutgraph
