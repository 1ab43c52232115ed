#include "nutgraph/exact_linalg.hpp"

#include <algorithm>
#include <utility>

#include "nutgraph/number_theory.hpp"
#include "nutgraph/simd/kernels.hpp"

namespace nutgraph {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<BigInt> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) {
    throw std::invalid_argument("IntMatrix: entry count does not match shape");
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::string to_string(NullityMethod method) {
  switch (method) {
    case NullityMethod::exact_elimination: return "exact-elimination";
    case NullityMethod::modular_plus_kernel: return "modular-plus-kernel";
  }
  return "unknown";
}

namespace {

struct Echelon {
  IntMatrix m;
  std::vector<std::size_t> pivot_cols;
};

// Fraction-free row echelon form. After the step that fixes pivot (r, c) every
// remaining entry is a minor of the input, so the division by the previous
// pivot is exact.
Echelon bareiss_echelon(IntMatrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;
  BigInt prev = 1;
  BigInt tmp;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot_row = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (sgn(m(i, c)) != 0) {
        pivot_row = i;
        break;
      }
    }
    if (pivot_row == rows) continue;
    if (pivot_row != r) {
      for (std::size_t j = c; j < cols; ++j) swap(m(r, j), m(pivot_row, j));
    }
    const BigInt& pivot = m(r, c);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const bool has_entry = sgn(m(i, c)) != 0;
      for (std::size_t j = c + 1; j < cols; ++j) {
        if (has_entry) {
          mpz_mul(tmp.get_mpz_t(), pivot.get_mpz_t(), m(i, j).get_mpz_t());
          mpz_submul(tmp.get_mpz_t(), m(i, c).get_mpz_t(), m(r, j).get_mpz_t());
        } else if (sgn(m(i, j)) != 0) {
          mpz_mul(tmp.get_mpz_t(), pivot.get_mpz_t(), m(i, j).get_mpz_t());
        } else {
          continue;
        }
        mpz_divexact(m(i, j).get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, c) = 0;
    }
    prev = pivot;
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank_mod_p_f64(const IntMatrix& a, std::uint64_t p) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::vector<double> m(rows * cols);
  BigInt residue;
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      mpz_fdiv_r_ui(residue.get_mpz_t(), a(i, j).get_mpz_t(), p);
      m[i * cols + j] = static_cast<double>(residue.get_ui());
    }
  }
  const auto& kernels = simd::active();
  const double pd = static_cast<double>(p);
  const double pinv = 1.0 / pd;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot_row = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (m[i * cols + c] != 0.0) {
        pivot_row = i;
        break;
      }
    }
    if (pivot_row == rows) continue;
    if (pivot_row != r) {
      std::swap_ranges(m.begin() + static_cast<std::ptrdiff_t>(r * cols + c),
                       m.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols),
                       m.begin() + static_cast<std::ptrdiff_t>(pivot_row * cols + c));
    }
    const double* pivot_tail = m.data() + r * cols + c;
    const std::uint64_t inv = inverse_mod_prime(static_cast<std::uint64_t>(pivot_tail[0]), p);
    for (std::size_t i = r + 1; i < rows; ++i) {
      double* row_tail = m.data() + i * cols + c;
      if (row_tail[0] == 0.0) continue;
      const std::uint64_t entry = static_cast<std::uint64_t>(row_tail[0]);
      const std::uint64_t factor = mul_mod(p - entry, inv, p);
      kernels.axpy_mod(row_tail, pivot_tail, static_cast<double>(factor), pd, pinv, cols - c);
    }
    ++r;
  }
  return r;
}

std::size_t rank_mod_p_u64(const IntMatrix& a, std::uint64_t p) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::vector<std::uint64_t> m(rows * cols);
  BigInt residue;
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      mpz_fdiv_r_ui(residue.get_mpz_t(), a(i, j).get_mpz_t(), p);
      m[i * cols + j] = residue.get_ui();
    }
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot_row = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (m[i * cols + c] != 0) {
        pivot_row = i;
        break;
      }
    }
    if (pivot_row == rows) continue;
    if (pivot_row != r) {
      for (std::size_t j = c; j < cols; ++j) std::swap(m[r * cols + j], m[pivot_row * cols + j]);
    }
    const std::uint64_t inv = inverse_mod_prime(m[r * cols + c], p);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const std::uint64_t entry = m[i * cols + c];
      if (entry == 0) continue;
      const std::uint64_t factor = mul_mod(p - entry, inv, p);
      for (std::size_t j = c; j < cols; ++j) {
        std::uint64_t v = m[i * cols + j] + mul_mod(factor, m[r * cols + j], p);
        m[i * cols + j] = v >= p ? v - p : v;
      }
    }
    ++r;
  }
  return r;
}

}  // namespace

void normalize_leading_one(RationalVector& v) {
  auto lead = std::find_if(v.begin(), v.end(), [](const BigRational& x) { return sgn(x) != 0; });
  if (lead == v.end() || *lead == 1) return;
  const BigRational scale = *lead;
  for (auto& x : v) x /= scale;
}

std::size_t rank_rational(const IntMatrix& a) { return bareiss_echelon(a).pivot_cols.size(); }

NullityResult nullspace_rational(const IntMatrix& a) {
  if (!a.square()) throw std::invalid_argument("nullspace_rational: matrix is not square");
  const std::size_t n = a.cols();
  Echelon e = bareiss_echelon(a);
  const std::size_t rank = e.pivot_cols.size();

  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : e.pivot_cols) is_pivot[c] = true;

  NullityResult result;
  result.method = NullityMethod::exact_elimination;
  result.nullity = n - rank;
  BigRational sum;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    RationalVector x(n);
    x[free] = 1;
    for (std::size_t k = rank; k-- > 0;) {
      const std::size_t pc = e.pivot_cols[k];
      sum = 0;
      for (std::size_t j = pc + 1; j < n; ++j) {
        if (sgn(e.m(k, j)) != 0 && sgn(x[j]) != 0) sum += e.m(k, j) * x[j];
      }
      x[pc] = -sum / e.m(k, pc);
    }
    normalize_leading_one(x);
    result.basis.push_back(std::move(x));
  }
  return result;
}

std::size_t rank_mod_p(const IntMatrix& a, std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 63) || !is_prime_u64(p)) {
    throw std::invalid_argument("rank_mod_p: modulus is not a prime below 2^63");
  }
  if (p < simd::kMaxF64Modulus) return rank_mod_p_f64(a, p);
  return rank_mod_p_u64(a, p);
}

bool kernel_check(const IntMatrix& a, std::span<const BigRational> v) {
  if (v.size() != a.cols()) throw std::invalid_argument("kernel_check: length mismatch");
  if (std::all_of(v.begin(), v.end(), [](const BigRational& x) { return sgn(x) == 0; })) {
    throw std::invalid_argument("kernel_check: zero vector");
  }
  // Clear denominators so the products run over integers.
  BigInt common = 1;
  for (const auto& x : v) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), x.get_den_mpz_t());
  std::vector<BigInt> w(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) {
    w[j] = v[j].get_num() * (common / v[j].get_den());
  }
  BigInt dot;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    dot = 0;
    auto row = a.row(i);
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (sgn(row[j]) != 0) mpz_addmul(dot.get_mpz_t(), row[j].get_mpz_t(), w[j].get_mpz_t());
    }
    if (sgn(dot) != 0) return false;
  }
  return true;
}

NullityResult certify_nullity_one(const IntMatrix& a, std::span<const BigRational> candidate,
                                  std::uint64_t prime) {
  if (!a.square()) throw std::invalid_argument("certify_nullity_one: matrix is not square");
  if (!kernel_check(a, candidate)) throw CandidateNotInKernel();
  const std::size_t n = a.rows();
  if (rank_mod_p(a, prime) + 1 == n) {
    NullityResult result;
    result.nullity = 1;
    result.method = NullityMethod::modular_plus_kernel;
    RationalVector v(candidate.begin(), candidate.end());
    normalize_leading_one(v);
    result.basis.push_back(std::move(v));
    return result;
  }
  return nullspace_rational(a);
}

}  // namespace nutgraph
