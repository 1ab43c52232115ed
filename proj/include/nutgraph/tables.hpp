#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nutgraph/construction.hpp"
#include "nutgraph/coverage.hpp"
#include "nutgraph/nut_verify.hpp"

namespace nutgraph {

/// One published split. Tables 1 and 2 are families in n (a = 2 and a = 4);
/// table 3 rows carry their own n.
struct TableRow {
  int table = 0;
  std::uint64_t n = 0;  // 0 for tables 1 and 2
  std::uint64_t s = 0;
  std::uint64_t m = 0, t = 0;
  std::uint64_t a = 0;
  std::uint64_t kappa = 0;
  std::string m_block, t_block;
  std::uint64_t k1 = 0, k2 = 0;
};

/// Rows of table 1, 2 or 3; throws std::invalid_argument otherwise.
const std::vector<TableRow>& table_rows(int table);

/// Default n: 3 for table 1, 5 for table 2, the row's own n for table 3.
std::uint64_t default_table_n(int table);
/// Odd n >= 3 for table 1; n >= 5 with n ≡ 1 (mod 4) or n composite for table 2.
bool admissible_table_n(int table, std::uint64_t n);

/// The row as a split witness (blocks parsed against m and t).
SplitWitness row_witness(const TableRow& row);
/// k1 = a·val[m], k2 = val(Δ2)·val[t] with val(Δ2) = 1 for κ = a and a for κ = a².
std::pair<std::uint64_t, std::uint64_t> recomputed_k(const TableRow& row);
/// n is ignored for table 3 rows.
SpecText row_spec_text(const TableRow& row, std::uint64_t n);

struct RowCheck {
  std::uint64_t order = 0;
  /// recomputed k1, k2 equal the published columns
  bool k_match = false;
  /// merged tuple equals <nm, k1, t, nt, k2, m>
  bool tuple_match = false;
  SpecCheck spec;
  bool pass = false;
};

RowCheck check_row(const TableRow& row, std::uint64_t n);

}  // namespace nutgraph
