#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace nutgraph {

using BigInt = mpz_class;
/// GMP rationals are kept canonical (lowest terms, positive denominator).
using BigRational = mpq_class;
using RationalVector = std::vector<BigRational>;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<BigInt> entries);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const BigInt> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  const std::vector<BigInt>& entries() const { return data_; }

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

enum class NullityMethod { exact_elimination, modular_plus_kernel };

std::string to_string(NullityMethod method);

struct NullityResult {
  std::size_t nullity = 0;
  /// Exactly `nullity` vectors, each with first nonzero coordinate equal to 1.
  std::vector<RationalVector> basis;
  NullityMethod method = NullityMethod::exact_elimination;
};

/// Raised by certify_nullity_one when the candidate fails A·v = 0.
class CandidateNotInKernel : public std::runtime_error {
 public:
  CandidateNotInKernel() : std::runtime_error("candidate not in kernel") {}
};

/// Largest prime below 2^26; small enough for the vectorised residue kernels.
inline constexpr std::uint64_t kDefaultCertificatePrime = 67108859;

/// Exact rank over Q by fraction-free (Bareiss) elimination.
std::size_t rank_rational(const IntMatrix& a);

/// Exact nullspace over Q. Pivots are the first nonzero entry met scanning the
/// remaining rows of each column; basis vectors come one per free column in
/// increasing column order. Throws std::invalid_argument if `a` is not square.
NullityResult nullspace_rational(const IntMatrix& a);

/// Rank of `a` reduced modulo the prime `p` (p < 2^63). Throws
/// std::invalid_argument when p is not prime.
std::size_t rank_mod_p(const IntMatrix& a, std::uint64_t p);

/// A·v == 0 exactly. Throws std::invalid_argument on a length mismatch or an
/// all-zero v.
bool kernel_check(const IntMatrix& a, std::span<const BigRational> v);

/// Nullity-one certificate: if `candidate` is a kernel vector and the rank mod
/// `prime` is side−1, the rational nullity is exactly 1 (rank over F_p never
/// exceeds rank over Q). Otherwise falls back to nullspace_rational. Throws
/// CandidateNotInKernel when the candidate is not a kernel vector.
NullityResult certify_nullity_one(const IntMatrix& a, std::span<const BigRational> candidate,
                                  std::uint64_t prime = kDefaultCertificatePrime);

/// Scales v so that its first nonzero coordinate is 1 (no-op on zero vectors).
void normalize_leading_one(RationalVector& v);

}  // namespace nutgraph
