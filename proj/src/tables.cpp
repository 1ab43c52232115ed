#include "nutgraph/tables.hpp"

#include <stdexcept>

#include "nutgraph/sieve.hpp"

namespace nutgraph {
namespace {

TableRow family_row(int table, std::uint64_t a, std::uint64_t s, std::uint64_t m, std::uint64_t t,
                    std::uint64_t kappa, const char* mb, const char* tb, std::uint64_t k1, std::uint64_t k2) {
  return TableRow{table, 0, s, m, t, a, kappa, mb, tb, k1, k2};
}

TableRow prime_row(std::uint64_t n, std::uint64_t m, std::uint64_t t, std::uint64_t a, std::uint64_t kappa,
                   const char* mb, const char* tb, std::uint64_t k1, std::uint64_t k2) {
  return TableRow{3, n, m + t, m, t, a, kappa, mb, tb, k1, k2};
}

std::vector<TableRow> make_table1() {
  return {
      family_row(1, 2, 3, 1, 2, 2, "1||", "1||2", 2, 1),
      family_row(1, 2, 5, 1, 4, 4, "1||", "4||", 2, 2),
      family_row(1, 2, 7, 3, 4, 2, "1||3", "1||4", 4, 3),
      family_row(1, 2, 11, 3, 8, 4, "1||3", "2||4", 4, 6),
      family_row(1, 2, 13, 1, 12, 4, "1||", "3||4", 2, 6),
      family_row(1, 2, 29, 21, 8, 4, "3||7", "1||8", 12, 14),
      family_row(1, 2, 31, 15, 16, 4, "3||5", "1||16", 8, 30),
      family_row(1, 2, 37, 21, 16, 4, "1||3,7", "2||8", 24, 14),
      family_row(1, 2, 41, 9, 32, 4, "1||9", "2||4,4", 16, 18),
      family_row(1, 2, 47, 15, 32, 4, "1||3,5", "2||16", 16, 30),
      family_row(1, 2, 53, 5, 48, 4, "1||5", "3||16", 8, 30),
      family_row(1, 2, 59, 3, 56, 4, "3||", "1||7,8", 2, 84),
      family_row(1, 2, 83, 3, 80, 2, "1||3", "1||5,16", 4, 60),
      family_row(1, 2, 101, 5, 96, 4, "1||5", "2||3,16", 8, 60),
      family_row(1, 2, 103, 55, 48, 2, "1||5,11", "1||4,12", 80, 33),
      family_row(1, 2, 109, 45, 64, 4, "1|5^(2)|9", "1||4,16", 32, 90),
      family_row(1, 2, 127, 63, 64, 4, "1|7^(2)|9", "1||64", 32, 126),
      family_row(1, 2, 131, 35, 96, 4, "1||5,7", "2||6,8", 48, 70),
      family_row(1, 2, 137, 105, 32, 2, "1||5,21", "1||4,8", 160, 21),
      family_row(1, 2, 139, 19, 120, 4, "1|19^(6)|", "1||6,20", 12, 190),
  };
}

std::vector<TableRow> make_table2() {
  return {
      family_row(2, 4, 17, 1, 16, 16, "1||", "16||", 4, 4),
      family_row(2, 4, 19, 3, 16, 16, "3||", "4||4", 4, 12),
      family_row(2, 4, 23, 7, 16, 16, "7||", "2||8", 4, 28),
      family_row(2, 4, 73, 9, 64, 16, "1||3,3", "4||4,4", 16, 36),
      family_row(2, 4, 79, 15, 64, 16, "3||5", "4||16", 16, 60),
      family_row(2, 4, 97, 1, 96, 16, "1||", "8||3,4", 4, 24),
      family_row(2, 4, 107, 11, 96, 16, "1|11^(2)|", "2||4,12", 8, 132),
      family_row(2, 4, 113, 49, 64, 16, "1|7^(2),7^(2)|", "1||8,8", 16, 196),
  };
}

std::vector<TableRow> make_table3() {
  return {
      prime_row(19, 1, 18, 18, 18, "1||", "9||2", 18, 1),
      prime_row(19, 5, 18, 18, 18, "5||", "3||6", 18, 5),
      prime_row(23, 1, 22, 22, 22, "1||", "11||2", 22, 1),
      prime_row(43, 3, 14, 42, 42, "3||", "7||2", 42, 1),
      prime_row(43, 7, 12, 42, 42, "1|7^(2)|", "6||2", 84, 1),
      prime_row(43, 21, 2, 42, 42, "21||", "1||2", 42, 1),
      prime_row(67, 11, 6, 66, 66, "11||", "3||2", 66, 1),
      prime_row(71, 7, 10, 70, 70, "7||", "5||2", 70, 1),
      prime_row(19, 55, 12, 6, 6, "5||11", "1||12", 60, 11),
      prime_row(71, 5, 14, 70, 70, "5||", "7||2", 70, 1),
      prime_row(79, 13, 6, 78, 78, "13||", "3||2", 78, 1),
      prime_row(23, 55, 12, 22, 22, "5||11", "3||4", 220, 3),
      prime_row(23, 55, 16, 22, 22, "1||5,11", "8||2", 880, 1),
      prime_row(23, 55, 24, 22, 22, "11||5", "1||4,6", 88, 15),
      prime_row(43, 1, 42, 42, 42, "1||", "21||2", 42, 1),
      prime_row(19, 27, 80, 18, 18, "3||3,3", "1|5^(2)|16", 72, 30),
      prime_row(23, 63, 44, 22, 22, "9||7", "2||22", 132, 21),
  };
}

}  // namespace

const std::vector<TableRow>& table_rows(int table) {
  static const std::vector<TableRow> t1 = make_table1();
  static const std::vector<TableRow> t2 = make_table2();
  static const std::vector<TableRow> t3 = make_table3();
  switch (table) {
    case 1:
      return t1;
    case 2:
      return t2;
    case 3:
      return t3;
    default:
      throw std::invalid_argument("table must be 1, 2 or 3");
  }
}

std::uint64_t default_table_n(int table) {
  switch (table) {
    case 1:
      return 3;
    case 2:
      return 5;
    case 3:
      return 0;
    default:
      throw std::invalid_argument("table must be 1, 2 or 3");
  }
}

bool admissible_table_n(int table, std::uint64_t n) {
  switch (table) {
    case 1:
      return n >= 3 && n % 2 == 1;
    case 2:
      return n >= 5 && n % 2 == 1 && (n % 4 == 1 || !is_prime(n));
    default:
      return false;
  }
}

SplitWitness row_witness(const TableRow& row) {
  SplitWitness w;
  w.m = row.m;
  w.t = row.t;
  w.a = row.a;
  w.kappa = row.kappa;
  w.m_factorization = parse_factorization(row.m_block, row.m);
  w.t_factorization = parse_factorization(row.t_block, row.t);
  w.v_m = w.m_factorization.valence();
  w.v_t = w.t_factorization.valence();
  return w;
}

std::pair<std::uint64_t, std::uint64_t> recomputed_k(const TableRow& row) {
  const SplitWitness w = row_witness(row);
  const std::uint64_t delta2_valence = row.kappa == row.a ? 1 : row.a;
  return {row.a * w.v_m, delta2_valence * w.v_t};
}

SpecText row_spec_text(const TableRow& row, std::uint64_t n) {
  return witness_to_spec_text(row_witness(row), row.table == 3 ? row.n : n);
}

RowCheck check_row(const TableRow& row, std::uint64_t n) {
  if (row.table == 3) n = row.n;
  RowCheck c;
  c.order = n * row.s;
  const auto [k1, k2] = recomputed_k(row);
  c.k_match = k1 == row.k1 && k2 == row.k2;
  c.spec = check_merge_spec(realize(row_spec_text(row, n)));
  const ParameterTuple expected{n * row.m, k1, row.t, n * row.t, k2, row.m};
  c.tuple_match = c.spec.merged.bi_regular && c.spec.merged.tuple == expected;
  c.pass = c.k_match && c.tuple_match && c.spec.pass && c.spec.merged.graph.order() == c.order;
  return c;
}

}  // namespace nutgraph
