#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nutgraph/exact_linalg.hpp"

namespace nutgraph {

/// Simple graph with optional loops, stored as bit-packed adjacency rows.
///
/// A loop is a diagonal 1 and counts once toward the valence, so loops(n) is
/// 1-regular and is the identity for the Kronecker product.
class MultiGraph {
 public:
  MultiGraph() = default;
  explicit MultiGraph(std::size_t order);

  std::size_t order() const { return order_; }
  std::size_t words_per_row() const { return words_; }

  bool adjacent(std::size_t u, std::size_t v) const {
    return (bits_[u * words_ + v / 64] >> (v % 64)) & 1U;
  }
  /// Adds the edge uv (a loop when u == v); adding twice is a no-op.
  void add_edge(std::size_t u, std::size_t v);

  std::span<const std::uint64_t> row_bits(std::size_t v) const {
    return {bits_.data() + v * words_, words_};
  }
  std::span<std::uint64_t> row_bits(std::size_t v) { return {bits_.data() + v * words_, words_}; }

  std::size_t valence(std::size_t v) const;
  std::vector<std::size_t> neighbors(std::size_t v) const;

  bool has_loops() const;
  /// Adjacency equals the identity: n isolated looped vertices.
  bool loops_only() const;
  /// Loops count once.
  std::size_t edge_count() const;
  /// All edges (u, v) with u <= v in lexicographic order.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  IntMatrix adjacency_matrix() const;

  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);

  bool operator==(const MultiGraph& other) const {
    return order_ == other.order_ && bits_ == other.bits_;
  }

 private:
  std::size_t order_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::string> labels_;
};

struct GraphStats {
  bool connected = false;
  bool bipartite = false;
  bool regular = false;
  /// valence -> number of vertices with that valence
  std::map<std::size_t, std::size_t> degree_multiset;
};

MultiGraph cycle(std::size_t n);
MultiGraph complete(std::size_t n);
MultiGraph loops(std::size_t n);

/// Cay(Z_n; S). S is given as residues; 0 ∉ S and S = −S are required.
MultiGraph circulant(std::size_t n, const std::vector<std::int64_t>& connection_set);

/// Smallest primitive root modulo the odd prime p.
std::uint64_t smallest_primitive_root(std::uint64_t p);

/// Order-d subgroup of Z_p^* (d even, d | p−1), in generation order from the
/// smallest primitive root.
std::vector<std::int64_t> multiplicative_subgroup(std::uint64_t p, std::uint64_t d);

/// Cay(Z_p; S) with S the order-d subgroup of the units mod p.
MultiGraph subgroup_circulant(std::uint64_t p, std::uint64_t d);

/// Direct product; vertex (u1, u2) has index u1 * order(g2) + u2.
MultiGraph kronecker(const MultiGraph& g1, const MultiGraph& g2);
MultiGraph disjoint_union(const MultiGraph& g1, const MultiGraph& g2);
/// Edge-set union on a common vertex set.
MultiGraph union_graph(const MultiGraph& g1, const MultiGraph& g2);

GraphStats stats(const MultiGraph& g);
bool is_connected(const MultiGraph& g);
/// A loop is an odd closed walk, so a looped graph is never bipartite.
bool is_bipartite(const MultiGraph& g);

/// Strong connectivity of the digraph underlying A(g1)·A(g2).
bool product_irreducible(const MultiGraph& g1, const MultiGraph& g2);

/// True iff the adjacency matrix has a nonzero determinant (exact).
bool is_nonsingular(const MultiGraph& g);

}  // namespace nutgraph
