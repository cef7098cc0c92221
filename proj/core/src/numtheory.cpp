// Copyright 2026 The eqlc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "eqlc/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace eqlc {

Factorization::Factorization(std::uint64_t n, std::vector<PrimePower> factors)
    : n_(n), factors_(std::move(factors)) {}

std::vector<std::uint64_t> Factorization::primes() const {
  std::vector<std::uint64_t> out;
  out.reserve(factors_.size());
  for (const auto& f : factors_) out.push_back(f.prime);
  return out;
}

std::uint64_t Factorization::radical() const {
  std::uint64_t r = 1;
  for (const auto& f : factors_) r *= f.prime;
  return r;
}

Factorization factorize(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("factorize: n must be positive");
  const std::uint64_t original = n;
  std::vector<PrimePower> factors;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    factors.push_back({p, e});
  }
  if (n > 1) factors.push_back({n, 1});
  return Factorization(original, std::move(factors));
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t phi = n;
  for (const auto& f : factorize(n).factors()) phi = phi / f.prime * (f.prime - 1);
  return phi;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out{1};
  for (const auto& f : factorize(n).factors()) {
    const std::size_t existing = out.size();
    std::uint64_t pk = 1;
    for (unsigned e = 1; e <= f.exponent; ++e) {
      pk *= f.prime;
      for (std::size_t i = 0; i < existing; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  const auto f = factorize(n);
  return f.factors().size() == 1 && f.factors()[0].exponent == 1;
}

std::optional<PrimePower> as_prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  const auto f = factorize(q);
  if (f.factors().size() != 1) return std::nullopt;
  return f.factors()[0];
}

std::vector<SignedSubset> squarefree_subsets(std::span<const std::uint64_t> primes) {
  const std::size_t n = primes.size();
  if (n >= 63) throw std::invalid_argument("squarefree_subsets: too many primes");
  std::vector<SignedSubset> out;
  out.reserve(std::size_t{1} << n);
  // Size-major, then lexicographic on index sets: walk k-combinations in order.
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      SignedSubset s;
      s.sign = (k % 2 == 0) ? 1 : -1;
      for (std::size_t i : idx) {
        s.primes.push_back(primes[i]);
        s.product *= primes[i];
      }
      out.push_back(std::move(s));
      // Next combination.
      std::size_t pos = k;
      while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t j = pos; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return out;
}

__extension__ using UInt128 = unsigned __int128;

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  if (mod == 1) return 0;
  UInt128 result = 1;
  UInt128 b = base % mod;
  while (exp > 0) {
    if (exp & 1) result = result * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(result);
}

std::uint64_t multiplicative_order(std::uint64_t u, std::uint64_t n) {
  if (n == 0 || std::gcd(u, n) != 1)
    throw std::invalid_argument("multiplicative_order: u must be a unit mod n");
  if (n == 1) return 1;
  std::uint64_t order = euler_phi(n);
  for (const auto& f : factorize(order).factors()) {
    while (order % f.prime == 0 && pow_mod(u, order / f.prime, n) == 1) order /= f.prime;
  }
  return order;
}

std::uint64_t smallest_primitive_root(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("smallest_primitive_root: p must be prime");
  if (p == 2) return 1;
  for (std::uint64_t g = 2; g < p; ++g) {
    if (multiplicative_order(g, p) == p - 1) return g;
  }
  throw std::logic_error("no primitive root found");
}

Integer ipow(const Integer& base, std::uint64_t exp) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

}  // namespace eqlc
