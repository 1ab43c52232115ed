#pragma once
// Slow, obviously-correct reference computations used to derive expected
// values in the tests. Nothing here shares code with the library kernels.

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "nutgraph/exact_linalg.hpp"
#include "nutgraph/graph.hpp"

namespace oracle {

using Dense = std::vector<std::vector<mpq_class>>;

inline Dense to_dense(const nutgraph::IntMatrix& a) {
  Dense d(a.rows(), std::vector<mpq_class>(a.cols()));
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) d[r][c] = mpq_class(a(r, c));
  return d;
}

// Reduced row echelon form over Q; returns pivot columns.
inline std::vector<std::size_t> rref(Dense& d, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < d.size(); ++c) {
    std::size_t p = row;
    while (p < d.size() && d[p][c] == 0) ++p;
    if (p == d.size()) continue;
    std::swap(d[p], d[row]);
    const mpq_class inv = 1 / d[row][c];
    for (auto& x : d[row]) x *= inv;
    for (std::size_t r = 0; r < d.size(); ++r) {
      if (r == row || d[r][c] == 0) continue;
      const mpq_class f = d[r][c];
      for (std::size_t k = 0; k < cols; ++k) d[r][k] -= f * d[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

inline std::size_t rank_q(const nutgraph::IntMatrix& a) {
  Dense d = to_dense(a);
  return rref(d, a.cols()).size();
}

// Kernel basis read off the RREF.
inline std::vector<std::vector<mpq_class>> kernel_q(const nutgraph::IntMatrix& a) {
  Dense d = to_dense(a);
  const auto pivots = rref(d, a.cols());
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<mpq_class>> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<mpq_class> v(a.cols(), 0);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -d[i][f];
    basis.push_back(v);
  }
  return basis;
}

// Two families of vectors span the same subspace of Q^n.
inline bool same_span(const std::vector<std::vector<mpq_class>>& x, const std::vector<std::vector<mpq_class>>& y,
                      std::size_t n) {
  auto rank_of = [n](const std::vector<std::vector<mpq_class>>& rows) {
    Dense d = rows;
    return rref(d, n).size();
  };
  std::vector<std::vector<mpq_class>> both = x;
  both.insert(both.end(), y.begin(), y.end());
  const auto rx = rank_of(x);
  return rx == rank_of(y) && rx == rank_of(both);
}

inline std::size_t rank_mod(const nutgraph::IntMatrix& a, long long p) {
  std::vector<std::vector<long long>> d(a.rows(), std::vector<long long>(a.cols()));
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) {
      const mpz_class pp(std::to_string(p));
      mpz_class v = a(r, c) % pp;
      if (v < 0) v += pp;
      d[r][c] = std::stoll(v.get_str());
    }
  auto power = [p](long long b, long long e) {
    long long r = 1;
    b %= p;
    while (e > 0) {
      if (e & 1) r = static_cast<long long>((__int128)r * b % p);
      b = static_cast<long long>((__int128)b * b % p);
      e >>= 1;
    }
    return r;
  };
  std::size_t row = 0;
  for (std::size_t c = 0; c < a.cols() && row < d.size(); ++c) {
    std::size_t q = row;
    while (q < d.size() && d[q][c] == 0) ++q;
    if (q == d.size()) continue;
    std::swap(d[q], d[row]);
    const long long inv = power(d[row][c], p - 2);
    for (std::size_t r = row + 1; r < d.size(); ++r) {
      if (d[r][c] == 0) continue;
      const long long f = static_cast<long long>((__int128)d[r][c] * inv % p);
      for (std::size_t k = c; k < a.cols(); ++k) {
        d[r][k] = static_cast<long long>(((__int128)d[r][k] - (__int128)f * d[row][k]) % p);
        if (d[r][k] < 0) d[r][k] += p;
      }
    }
    ++row;
  }
  return row;
}

inline bool is_prime_naive(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

// Every valence ∏d·∏(z'−1) over all ways to write z as z0 · ∏p · ∏z' with
// circulant factors (p, d), d even dividing p−1, and complete factors z' ≥ 2.
// Factors are enumerated as non-decreasing atom sequences.
inline std::set<std::uint64_t> brute_valences(std::uint64_t z) {
  struct Atom {
    std::uint64_t order, valence;
  };
  std::vector<Atom> atoms;
  for (std::uint64_t f = 2; f <= z; ++f) {
    if (z % f != 0) continue;
    atoms.push_back({f, f - 1});
    if (f % 2 == 1 && is_prime_naive(f)) {
      for (std::uint64_t d = 2; d <= f - 1; d += 2)
        if ((f - 1) % d == 0) atoms.push_back({f, d});
    }
  }
  std::set<std::uint64_t> out;
  std::function<void(std::size_t, std::uint64_t, std::uint64_t)> rec = [&](std::size_t from, std::uint64_t left,
                                                                           std::uint64_t val) {
    out.insert(val);  // the rest becomes the loop factor
    for (std::size_t i = from; i < atoms.size(); ++i) {
      if (left % atoms[i].order == 0) rec(i, left / atoms[i].order, val * atoms[i].valence);
    }
  };
  rec(0, z, 1);
  return out;
}

}  // namespace oracle
