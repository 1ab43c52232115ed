#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "nutgraph/construction.hpp"

namespace nutgraph {

/// Valences achievable by z0 loops × ∏ C_p^(d) × ∏ K_z' of order z, each with
/// one witness factorization.
struct ValenceSet {
  std::uint64_t z = 0;
  std::map<std::uint64_t, BlockFactorization> entries;
};

struct SplitWitness {
  std::uint64_t m = 0, t = 0;
  std::uint64_t v_m = 0, v_t = 0;
  std::uint64_t kappa = 0;
  std::uint64_t a = 0;
  BlockFactorization m_factorization;
  BlockFactorization t_factorization;

  /// κ·v_m·v_t = m·t and t + a·v_m != m + (κ/a)·v_t, m odd, t even.
  bool valid() const;
  bool operator==(const SplitWitness&) const = default;
};

enum class Corollary { three_n, tetra, novi };
std::string to_string(Corollary c);

struct CoverWitness {
  Corollary corollary = Corollary::three_n;
  std::uint64_t order = 0;
  std::uint64_t n = 0;
  SplitWitness split;
};

struct CheckpointRow {
  std::uint64_t bound = 0;
  std::uint64_t x = 0, x1 = 0, x2 = 0, x3 = 0;
  bool operator==(const CheckpointRow&) const = default;
};

struct CoverageReport {
  std::uint64_t bound = 0;
  std::vector<CheckpointRow> rows;
  /// X3 members up to the bound, ascending.
  std::vector<std::uint64_t> remaining;
  /// Every odd non-prime in [9, bound] in ascending order with its witness
  /// (absent for X3 members).
  std::vector<std::pair<std::uint64_t, std::optional<CoverWitness>>> orders;
};

/// Checkpoint bounds of the published million-order campaign.
const std::vector<std::uint64_t>& default_checkpoints();

/// Memoized search state. Queries may run from several threads: lookups take a
/// shared lock, inserts an exclusive one, and all results are deterministic so
/// racing inserts agree.
class CoverageEngine {
 public:
  CoverageEngine();
  ~CoverageEngine();
  CoverageEngine(const CoverageEngine&) = delete;
  CoverageEngine& operator=(const CoverageEngine&) = delete;

  /// Sorted achievable valences of z (z >= 1).
  const std::vector<std::uint64_t>& valences(std::uint64_t z);
  bool has_valence(std::uint64_t z, std::uint64_t v);
  ValenceSet valence_set(std::uint64_t z);
  BlockFactorization valence_witness(std::uint64_t z, std::uint64_t v);

  /// First split of s in scan order (m ascending, κ in the given order, v_m
  /// ascending). Throws std::invalid_argument for even s or s < 3.
  std::optional<SplitWitness> find_split(std::uint64_t s, std::uint64_t a, const std::vector<std::uint64_t>& kappas);

  /// Preconditions for the three: N odd, not prime, N >= 9.
  std::optional<CoverWitness> covers_3n(std::uint64_t order);
  std::optional<CoverWitness> covers_tetra(std::uint64_t order);
  std::optional<CoverWitness> covers_novi(std::uint64_t order);
  /// First corollary (in the order above) that covers.
  std::optional<CoverWitness> cover(std::uint64_t order);

  /// jobs == 0 picks the hardware concurrency.
  CoverageReport report(std::uint64_t bound, std::vector<std::uint64_t> checkpoints = default_checkpoints(),
                        unsigned jobs = 1);

  /// Versioned text cache (header "nutgraph-cache 1", then V and S records).
  void save_cache(std::ostream& out);
  void load_cache(std::istream& in);
  std::size_t cached_valence_sets() const;
  std::size_t cached_splits() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Realizes a witness as a spec of order n(m+t): Λ1 = C_n for a = 2, K_n for
/// a = n − 1, C_n1 × C_n2 for a = 4 and composite n, the order-a subgroup
/// circulant for prime n; Δ2 diagonal when κ = a, Λ1 when κ = a².
/// Throws SpecError when no such Λ1 exists.
SpecText witness_to_spec_text(const SplitWitness& w, std::uint64_t n);
MergeSpec witness_to_spec(const SplitWitness& w, std::uint64_t n);

void write_report_csv(std::ostream& out, const CoverageReport& report);
/// Single JSON document with schema field, rows, remaining and witnesses.
void write_report_json(std::ostream& out, const CoverageReport& report);

}  // namespace nutgraph
