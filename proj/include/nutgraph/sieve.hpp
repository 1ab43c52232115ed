#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace nutgraph {

/// spf[k] is the smallest prime factor of k for 2 <= k <= n; spf[0] = 0, spf[1] = 1.
std::vector<std::uint32_t> smallest_prime_factor_table(std::uint32_t n);

/// Trial division; fine for the orders this library meets.
bool is_prime(std::uint64_t n);
std::uint64_t smallest_prime_factor(std::uint64_t n);
/// Ascending, including 1 and n. divisors(0) is empty.
std::vector<std::uint64_t> divisors(std::uint64_t n);
/// (prime, exponent) pairs, ascending primes.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

/// Table-backed versions of the above for every k <= limit.
class Sieve {
 public:
  explicit Sieve(std::uint32_t limit);

  std::uint32_t limit() const { return limit_; }
  bool is_prime(std::uint32_t k) const { return k >= 2 && spf_[k] == k; }
  std::uint32_t smallest_prime_factor(std::uint32_t k) const { return spf_[k]; }
  std::vector<std::pair<std::uint32_t, unsigned>> factorize(std::uint32_t k) const;
  std::vector<std::uint32_t> divisors(std::uint32_t k) const;

 private:
  std::uint32_t limit_;
  std::vector<std::uint32_t> spf_;
};

}  // namespace nutgraph
