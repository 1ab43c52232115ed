#include "nutgraph/sieve.hpp"

#include <algorithm>
#include <stdexcept>

namespace nutgraph {
namespace {

template <typename T>
std::vector<T> expand_divisors(const std::vector<std::pair<T, unsigned>>& factors) {
  std::vector<T> out{1};
  for (auto [p, e] : factors) {
    const std::size_t base = out.size();
    T power = 1;
    for (unsigned k = 0; k < e; ++k) {
      power *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<std::uint32_t> smallest_prime_factor_table(std::uint32_t n) {
  std::vector<std::uint32_t> spf(static_cast<std::size_t>(n) + 1, 0);
  if (n >= 1) spf[1] = 1;
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (spf[i] != 0) continue;
    spf[i] = static_cast<std::uint32_t>(i);
    for (std::uint64_t j = i * i; j <= n; j += i) {
      if (spf[j] == 0) spf[j] = static_cast<std::uint32_t>(i);
    }
  }
  return spf;
}

std::uint64_t smallest_prime_factor(std::uint64_t n) {
  if (n < 2) return n;
  if (n % 2 == 0) return 2;
  for (std::uint64_t q = 3; q * q <= n; q += 2) {
    if (n % q == 0) return q;
  }
  return n;
}

bool is_prime(std::uint64_t n) { return n >= 2 && smallest_prime_factor(n) == n; }

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  while (n > 1) {
    const std::uint64_t p = smallest_prime_factor(n);
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  if (n == 0) return {};
  return expand_divisors(factorize(n));
}

Sieve::Sieve(std::uint32_t limit) : limit_(limit), spf_(smallest_prime_factor_table(limit)) {}

std::vector<std::pair<std::uint32_t, unsigned>> Sieve::factorize(std::uint32_t k) const {
  if (k > limit_) throw std::out_of_range("Sieve: argument above limit");
  std::vector<std::pair<std::uint32_t, unsigned>> out;
  while (k > 1) {
    const std::uint32_t p = spf_[k];
    unsigned e = 0;
    while (k % p == 0) {
      k /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  return out;
}

std::vector<std::uint32_t> Sieve::divisors(std::uint32_t k) const {
  if (k == 0) return {};
  return expand_divisors(factorize(k));
}

}  // namespace nutgraph
