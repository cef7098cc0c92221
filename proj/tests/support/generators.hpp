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

// Seeded generators for property tests. Every generator is a pure function
// of the Rng state so failures reproduce from the printed seed.

#pragma once

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "eqlc/cochain_complex.hpp"
#include "eqlc/int_matrix.hpp"
#include "eqlc/numtheory.hpp"

namespace eqlc::testing {

// splitmix64
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [lo, hi].
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) { return lo + next() % (hi - lo + 1); }
  std::int64_t signed_uniform(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool coin() { return (next() & 1) != 0; }

  template <typename T>
  const T& pick(const std::vector<T>& v) { return v[next() % v.size()]; }

 private:
  std::uint64_t state_;
};

// A unimodular n x n matrix together with its inverse, built from random
// elementary operations.
inline std::pair<IntMatrix, IntMatrix> random_unimodular(Rng& rng, std::size_t n, int steps = 6) {
  IntMatrix u = IntMatrix::identity(n);
  IntMatrix inv = IntMatrix::identity(n);
  if (n < 2) return {u, inv};
  for (int s = 0; s < steps; ++s) {
    const std::size_t i = rng.uniform(0, n - 1);
    std::size_t j = rng.uniform(0, n - 2);
    if (j >= i) ++j;
    const long c = rng.signed_uniform(-3, 3);
    // E = I + c e_ij acts on the left of u; its inverse I - c e_ij acts on
    // the right of inv.
    u.add_row_multiple(i, j, Integer(c));
    inv.add_col_multiple(j, i, Integer(-c));
  }
  return {u, inv};
}

// Bounded complex of finite abelian groups, assembled as a direct sum of
// short exact-shape pieces Z/a -> Z/b -> Z/e (with the divisibility that
// makes each map well defined and the composite zero) and then disguised by
// a random change of generators in every degree.
inline BoundedComplex random_finite_complex(Rng& rng, int lo, int length) {
  const std::size_t n = static_cast<std::size_t>(length);
  std::vector<std::vector<Integer>> orders(n);        // cyclic summands per degree
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> links(n);  // (src idx, dst idx) per degree
  std::vector<std::vector<Integer>> link_mult(n);

  const int pieces = static_cast<int>(rng.uniform(1, 4));
  for (int piece = 0; piece < pieces; ++piece) {
    const std::size_t start = rng.uniform(0, n - 1);
    const std::size_t span = std::min<std::size_t>(rng.uniform(1, 3), n - start);
    // Orders a_0, a_1, ... and multipliers c_i with a_{i+1} | c_i a_i and
    // a_{i+2} | c_{i+1} c_i.
    std::vector<Integer> a{Integer(static_cast<unsigned long>(rng.uniform(2, 30)))};
    std::vector<Integer> c;
    for (std::size_t i = 1; i < span; ++i) {
      const Integer mult(static_cast<unsigned long>(rng.uniform(1, 6)));
      Integer bound = mult * a.back();
      if (c.size() >= 1) bound = gcd(bound, mult * c.back());
      // A random divisor of bound.
      Integer next = 1;
      for (const auto& [p, e] : factorize(bound.get_ui()).factors()) {
        const unsigned take = static_cast<unsigned>(rng.uniform(0, e));
        next *= ipow(Integer(static_cast<unsigned long>(p)), take);
      }
      c.push_back(mult);
      a.push_back(next);
    }
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < span; ++i) {
      idx.push_back(orders[start + i].size());
      orders[start + i].push_back(a[i]);
    }
    for (std::size_t i = 0; i + 1 < span; ++i) {
      links[start + i].push_back({idx[i], idx[i + 1]});
      link_mult[start + i].push_back(c[i]);
    }
  }

  std::vector<PresentedAbelianGroup> terms;
  std::vector<std::pair<IntMatrix, IntMatrix>> change;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t g = orders[i].size();
    auto uv = random_unimodular(rng, g);
    IntMatrix rel = uv.first * IntMatrix::diagonal(orders[i]);
    terms.emplace_back(g, rel);
    change.push_back(std::move(uv));
  }
  std::vector<IntMatrix> diffs;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    IntMatrix d(orders[i + 1].size(), orders[i].size());
    for (std::size_t k = 0; k < links[i].size(); ++k) d(links[i][k].second, links[i][k].first) = link_mult[i][k];
    diffs.push_back(change[i + 1].first * d * change[i].second);
  }
  return BoundedComplex(lo, std::move(terms), std::move(diffs));
}

struct FixedPointInstance {
  std::uint64_t mod = 1;
  std::uint64_t u = 1;
  std::uint64_t m = 1;
};

// m is a product of up to four distinct small primes (with small
// exponents); mod is a prime congruent to 1 modulo a random divisor of m
// times a small cofactor; u is a random unit pushed into the m-torsion.
inline FixedPointInstance random_fixed_point_instance(Rng& rng) {
  static const std::vector<std::uint64_t> primes{2, 3, 5, 7};
  FixedPointInstance out;
  const std::size_t distinct = rng.uniform(1, 4);
  std::vector<std::uint64_t> chosen = primes;
  for (std::size_t i = chosen.size(); i > 1; --i) std::swap(chosen[i - 1], chosen[rng.uniform(0, i - 1)]);
  chosen.resize(distinct);
  for (std::uint64_t p : chosen) {
    out.m *= p;
    if (out.m <= 60 && rng.uniform(0, 3) == 0) out.m *= p;
  }
  const auto divs = divisors(out.m);
  const std::uint64_t step = rng.pick(divs);
  std::uint64_t ell = 1 + step * rng.uniform(1, 400);
  while (!is_prime(ell)) ell += step;
  const std::uint64_t cofactor = rng.uniform(1, 12);
  out.mod = ell * cofactor;
  std::uint64_t w = rng.uniform(1, out.mod);
  while (std::gcd(w, out.mod) != 1) w = rng.uniform(1, out.mod);
  const std::uint64_t lambda = euler_phi(out.mod);
  out.u = pow_mod(w, lambda / std::gcd(lambda, out.m), out.mod);
  return out;
}

}  // namespace eqlc::testing
