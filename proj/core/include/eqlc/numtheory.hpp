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

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace eqlc {

using Integer = mpz_class;
using Rational = mpq_class;

struct PrimePower {
  std::uint64_t prime = 0;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Prime factorization n = prod p_i^{e_i} with p_1 < p_2 < ...
class Factorization {
 public:
  Factorization() = default;
  Factorization(std::uint64_t n, std::vector<PrimePower> factors);

  std::uint64_t value() const { return n_; }
  const std::vector<PrimePower>& factors() const& { return factors_; }
  // Rvalue overload so `for (auto f : factorize(n).factors())` stays valid.
  std::vector<PrimePower> factors() && { return std::move(factors_); }
  // Number of distinct primes (often written lambda).
  std::size_t num_distinct_primes() const { return factors_.size(); }
  std::vector<std::uint64_t> primes() const;
  // Product of the distinct primes.
  std::uint64_t radical() const;

 private:
  std::uint64_t n_ = 1;
  std::vector<PrimePower> factors_;
};

// Trial division. Throws std::invalid_argument for n == 0.
Factorization factorize(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);

// Divisors of n in increasing order.
std::vector<std::uint64_t> divisors(std::uint64_t n);

bool is_prime(std::uint64_t n);

// Returns (p, e) when q = p^e with e >= 1, otherwise nullopt.
std::optional<PrimePower> as_prime_power(std::uint64_t q);

// One term of an inclusion-exclusion sum over the distinct primes of m.
struct SignedSubset {
  std::vector<std::uint64_t> primes;  // increasing
  std::uint64_t product = 1;
  int sign = 1;  // (-1)^{|primes|}
};

// All 2^lambda subsets, ordered by size and then lexicographically by index.
// The empty subset comes first with sign +1.
std::vector<SignedSubset> squarefree_subsets(std::span<const std::uint64_t> primes);

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

// Multiplicative order of u modulo n; requires gcd(u, n) == 1.
std::uint64_t multiplicative_order(std::uint64_t u, std::uint64_t n);

// Smallest generator of (Z/p)^x for prime p.
std::uint64_t smallest_primitive_root(std::uint64_t p);

Integer ipow(const Integer& base, std::uint64_t exp);

}  // namespace eqlc
