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

#include <gtest/gtest.h>

#include <vector>

#include "eqlc/numtheory.hpp"
#include "support/generators.hpp"

namespace eqlc {
namespace {

TEST(Factorize, SmallCases) {
  EXPECT_TRUE(factorize(1).factors().empty());
  EXPECT_EQ(factorize(12).factors(), (std::vector<PrimePower>{{2, 2}, {3, 1}}));
  const auto f210 = factorize(210);
  EXPECT_EQ(f210.factors(), (std::vector<PrimePower>{{2, 1}, {3, 1}, {5, 1}, {7, 1}}));
  EXPECT_EQ(f210.num_distinct_primes(), 4u);
  EXPECT_EQ(f210.radical(), 210u);
  EXPECT_THROW(factorize(0), std::invalid_argument);
}

TEST(Factorize, ReassemblesRandomInputs) {
  testing::Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    const std::uint64_t n = rng.uniform(1, 5'000'000);
    std::uint64_t prod = 1;
    std::uint64_t last = 1;
    for (const auto& [p, e] : factorize(n).factors()) {
      EXPECT_GT(p, last);
      EXPECT_GE(e, 1u);
      EXPECT_TRUE(is_prime(p));
      for (unsigned k = 0; k < e; ++k) prod *= p;
      last = p;
    }
    EXPECT_EQ(prod, n) << "n=" << n;
  }
}

TEST(EulerPhi, MatchesCoprimeCount) {
  EXPECT_EQ(euler_phi(1), 1u);
  EXPECT_EQ(euler_phi(6), 2u);
  EXPECT_EQ(euler_phi(12), 4u);
  for (std::uint64_t n = 1; n <= 300; ++n) {
    std::uint64_t count = 0;
    for (std::uint64_t a = 1; a <= n; ++a) count += std::gcd(a, n) == 1;
    EXPECT_EQ(euler_phi(n), count) << n;
  }
}

TEST(Divisors, SortedAndComplete) {
  EXPECT_EQ(divisors(1), (std::vector<std::uint64_t>{1}));
  EXPECT_EQ(divisors(12), (std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12}));
  EXPECT_EQ(divisors(49), (std::vector<std::uint64_t>{1, 7, 49}));
}

TEST(SquarefreeSubsets, OrderAndSigns) {
  const std::vector<std::uint64_t> none;
  const auto empty = squarefree_subsets(none);
  ASSERT_EQ(empty.size(), 1u);
  EXPECT_EQ(empty[0].sign, 1);
  EXPECT_EQ(empty[0].product, 1u);

  const std::vector<std::uint64_t> two{2, 3};
  const auto s2 = squarefree_subsets(two);
  ASSERT_EQ(s2.size(), 4u);
  EXPECT_EQ(s2[1].primes, (std::vector<std::uint64_t>{2}));
  EXPECT_EQ(s2[2].primes, (std::vector<std::uint64_t>{3}));
  EXPECT_EQ(s2[3].product, 6u);

  const std::vector<std::uint64_t> three{2, 3, 5};
  std::vector<int> signs;
  for (const auto& s : squarefree_subsets(three)) signs.push_back(s.sign);
  EXPECT_EQ(signs, (std::vector<int>{1, -1, -1, -1, 1, 1, 1, -1}));
}

TEST(PrimePower, Recognition) {
  EXPECT_EQ(as_prime_power(8), (PrimePower{2, 3}));
  EXPECT_EQ(as_prime_power(49), (PrimePower{7, 2}));
  EXPECT_FALSE(as_prime_power(12));
  EXPECT_FALSE(as_prime_power(1));
}

TEST(ModularArithmetic, OrdersAndPrimitiveRoots) {
  EXPECT_EQ(pow_mod(3, 200, 1'000'000'007ULL), pow_mod(9, 100, 1'000'000'007ULL));
  EXPECT_EQ(multiplicative_order(4, 63), 3u);
  EXPECT_EQ(smallest_primitive_root(7), 3u);
  EXPECT_EQ(smallest_primitive_root(41), 6u);
  for (std::uint64_t p : {3, 5, 11, 13, 101})
    EXPECT_EQ(multiplicative_order(smallest_primitive_root(p), p), p - 1);
  EXPECT_EQ(ipow(Integer(7), 72), ipow(Integer(49), 36));
}

}  // namespace
}  // namespace eqlc
