#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nutgraph/construction.hpp"
#include "nutgraph/exact_linalg.hpp"
#include "nutgraph/graph.hpp"

namespace nutgraph {

struct NutCertificate {
  std::size_t order = 0;
  bool connected = false;
  std::size_t nullity = 0;
  /// Present iff nullity == 1; first nonzero entry scaled to 1.
  std::optional<RationalVector> kernel;
  /// min |x(v)| over the kernel, 0 when absent
  BigRational min_abs_entry = 0;
  bool is_nut = false;
  NullityMethod method = NullityMethod::exact_elimination;

  bool operator==(const NutCertificate&) const = default;
};

/// Exact path. Throws std::invalid_argument if g has loops.
NutCertificate is_nut(const MultiGraph& g);

/// Tries the canonical (1, −k1/d1) vector through certify_nullity_one first and
/// drops to exact elimination when it is not a kernel vector.
NutCertificate is_nut(const MultiGraph& g, const Bipartition& partition, const ParameterTuple& tuple);

/// 1 on V, −k1/d1 on U. Throws std::invalid_argument when d1 == 0 or the
/// partition sizes disagree with the tuple.
RationalVector canonical_kernel(const ParameterTuple& t, const Bipartition& partition);
/// Layout with V first.
RationalVector canonical_kernel(const ParameterTuple& t);

enum class Verdict { nut, not_nut, inapplicable };
std::string to_string(Verdict v);

struct TheoremKPrediction {
  Verdict verdict = Verdict::inapplicable;
  /// One entry per failing condition or unmet hypothesis.
  std::vector<std::string> reasons;
};

/// Decides nut-ness of merge(spec) from the blocks alone (Δ3 diagonal, odd
/// order, lambda1 and Δ2 non-singular; otherwise inapplicable). Conditions:
/// lambda4 and lambda5 non-singular, lambda1 ∪ Δ2 connected, k1·k2 = d1·d2.
TheoremKPrediction theorem_k_predict(const MergeSpec& spec);

struct SymmetryCertificate {
  std::size_t deg_v = 0;
  std::size_t deg_u = 0;
  bool constructed_orbits = false;
  bool certified_2_3 = false;
  std::string reason;

  bool operator==(const SymmetryCertificate&) const = default;
};

/// Two vertex and three edge orbits follow when the graph came out of merge
/// (the constructed group already has those orbits) and no automorphism can
/// swap V and U, which holds when k1 + d1 != k2 + d2.
SymmetryCertificate certify_2_3(const ParameterTuple& tuple, bool constructed_by_merge = true);

/// Everything checked about one merge spec.
struct SpecCheck {
  MergedGraph merged;
  TheoremKPrediction prediction;
  NutCertificate nut;
  SymmetryCertificate symmetry;
  /// predicted nut, certified nut, and certified (2,3)
  bool pass = false;
};

SpecCheck check_merge_spec(const MergeSpec& spec);

/// Key-value documents with a leading schema line and fixed field order.
std::string to_text(const NutCertificate& c);
std::string to_text(const SymmetryCertificate& c);
std::string format_rational(const BigRational& q);

}  // namespace nutgraph
