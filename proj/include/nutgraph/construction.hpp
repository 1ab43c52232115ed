#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nutgraph/graph.hpp"

namespace nutgraph {

/// Rejected factorization strings, builder expressions and merge specs.
class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotBiRegular : public std::runtime_error {
 public:
  NotBiRegular() : std::runtime_error("not bi-regular") {}
};

struct PrimeCirculantFactor {
  std::uint64_t p = 0;  // odd prime
  std::uint64_t d = 0;  // even divisor of p - 1
  bool operator==(const PrimeCirculantFactor&) const = default;
};

/// z0 loops × ∏ C_p^(d) × ∏ K_z', written "z0|p^(d),...|z',...".
struct BlockFactorization {
  std::uint64_t z0 = 1;
  std::vector<PrimeCirculantFactor> prime_factors;
  std::vector<std::uint64_t> complete_factors;

  std::uint64_t order() const;
  /// ∏ d · ∏ (z' − 1)
  std::uint64_t valence() const;
  /// Throws SpecError if any factor is malformed.
  void validate() const;

  bool operator==(const BlockFactorization&) const = default;
};

/// Parses "z0|p^(d),...|z',..." and checks that the product equals z.
BlockFactorization parse_factorization(std::string_view text, std::uint64_t z);
/// Same grammar, order taken from the product.
BlockFactorization parse_factorization(std::string_view text);
std::string format(const BlockFactorization& f);

/// Kronecker product loops(z0) × C_p^(d) × ... × K_z' × ..., in listed order.
MultiGraph build_block(const BlockFactorization& f);

struct ParameterTuple {
  std::size_t n1 = 0, k1 = 0, d1 = 0, n2 = 0, k2 = 0, d2 = 0;
  bool operator==(const ParameterTuple&) const = default;
};

std::string to_string(const ParameterTuple& t);

/// k1·k2 == d1·d2
bool valence_condition(const ParameterTuple& t);

/// Vertex bipartition (V, U); in_v[x] is true for x in V.
struct Bipartition {
  std::vector<bool> in_v;

  /// First n1 vertices in V, the rest in U.
  static Bipartition prefix(std::size_t order, std::size_t n1);
  std::size_t size_v() const;
  std::size_t size_u() const { return in_v.size() - size_v(); }
  bool operator==(const Bipartition&) const = default;
};

/// ⟨n1,k1,d1,n2,k2,d2⟩ of a bi-regular bi-decomposition; throws NotBiRegular
/// if any induced or cross degree is not constant on its side.
ParameterTuple extract_tuple(const MultiGraph& g, const Bipartition& partition);

enum class Delta2Mode { diagonal, same_as_delta1, explicit_graph };

/// Input to the two-orbit merge. Graph roles:
///   lambda1  orbital graph of Δ1 on Z_n
///   Δ2       loops(n), lambda1, or delta2_graph according to delta2_mode
///   delta3   nullopt means the diagonal; otherwise explicit arcs (i, i')
///   lambda4  block on Z_m, lambda5 block on Z_t
struct MergeSpec {
  MultiGraph lambda1;
  Delta2Mode delta2_mode = Delta2Mode::diagonal;
  MultiGraph delta2_graph;
  std::optional<std::vector<std::pair<std::size_t, std::size_t>>> delta3_arcs;
  MultiGraph lambda4;
  MultiGraph lambda5;

  std::size_t n() const { return lambda1.order(); }
  std::size_t m() const { return lambda4.order(); }
  std::size_t t() const { return lambda5.order(); }
  std::size_t order() const { return n() * (m() + t()); }
  bool delta3_diagonal() const { return !delta3_arcs.has_value(); }
  /// Orbital graph of Δ2 as an n-vertex multigraph.
  MultiGraph delta2() const;
};

struct MergedGraph {
  MultiGraph graph;
  Bipartition partition;
  /// All zero when the blocks are irregular (bi_regular false).
  ParameterTuple tuple;
  bool bi_regular = true;
  /// The spec actually realised (after the loop-avoiding adjustment).
  MergeSpec effective;
  bool adjusted = false;
};

/// Validates a spec. When Δ2 is diagonal and lambda5 is loops(t) with t even,
/// lambda5 is replaced by loops(t/2) × K_2 (same valence, no loops). Any other
/// loop-producing combination throws SpecError.
MergeSpec effective_spec(const MergeSpec& spec, bool* adjusted = nullptr);

/// Builds the merged graph on n(m+t) vertices. V = {v_i^j} in lexicographic
/// (i, j) order, then U = {u_i^j'}; v_i^j ~ u_i'^j' for every (i, i') in Δ3.
MergedGraph merge(const MergeSpec& spec);

/// Textual spec: builder expressions as they appear in spec files.
///
///     lambda1 cycle 3
///     delta2 diag            # diag | same | file <edge list>
///     delta3 diag            # diag | arclist <file>
///     lambda4 1||            # factorization or builder expression
///     lambda5 1||2
struct SpecText {
  std::string lambda1;
  std::string delta2 = "diag";
  std::string delta3 = "diag";
  std::string lambda4;
  std::string lambda5;

  std::string to_text() const;
};

SpecText parse_spec_text(std::istream& in);
SpecText read_spec_file(const std::string& path);
/// Relative paths inside the spec resolve against base_dir.
MergeSpec realize(const SpecText& text, const std::string& base_dir = ".");

/// Builder expressions (prefix form, whitespace separated):
///   cycle N | complete N | loops N | subgroup_circulant P D
///   circulant N s1,s2,...  | kron E1 E2 | file PATH | <factorization>
MultiGraph parse_builder(std::string_view expr, const std::string& base_dir = ".");

enum class GalleryId { fig3, fig4_left, fig4_right };

std::optional<GalleryId> parse_gallery_id(std::string_view name);
std::string to_string(GalleryId id);

struct GalleryGraph {
  MultiGraph graph;
  Bipartition partition;
  ParameterTuple tuple;
};

/// Order-35 graphs with two vertex and three edge orbits that are not merge
/// products. Γ1 occupies vertices 0..n1-1, Γ2 the rest.
GalleryGraph gallery(GalleryId id);

}  // namespace nutgraph
