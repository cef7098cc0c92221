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

#include <variant>

#include "eqlc/kummer.hpp"
#include "eqlc/reconstruct.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace eqlc::curves {
namespace {

std::vector<Rational> geometric(Rational ratio, std::size_t order) {
  std::vector<Rational> out{1};
  for (std::size_t r = 1; r <= order; ++r) out.push_back(out.back() * ratio);
  return out;
}

TruncatedLSeries rational_series(const std::vector<Rational>& c) {
  std::vector<CyclotomicNumber> v;
  for (const auto& x : c) v.emplace_back(1, x);
  return TruncatedLSeries(1, std::move(v));
}

TEST(PrimeField, IrreducibleSearchAndArithmetic) {
  EXPECT_TRUE(fp_is_irreducible({1, 1, 1}, 2));
  EXPECT_FALSE(fp_is_irreducible({1, 0, 1}, 2));
  EXPECT_EQ(first_irreducible(2, 2), (FpPoly{1, 1, 1}));
  for (std::uint64_t p : {2, 3, 5, 7})
    for (unsigned r = 1; r <= 6; ++r) {
      const FpPoly f = first_irreducible(p, r);
      EXPECT_EQ(f.size(), r + 1u);
      EXPECT_TRUE(fp_is_irreducible(f, p));
    }
  EXPECT_EQ(fp_mul({1, 1}, {1, 1}, 2), (FpPoly{1, 0, 1}));
  EXPECT_EQ(fp_inverse(3, 7), 5u);
}

TEST(FieldExt, MultiplicativeGroupIsCyclic) {
  for (auto [p, r] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 5}, {3, 4}, {5, 3}, {7, 2}}) {
    const FieldExt field(p, r);
    std::vector<bool> seen(field.size(), false);
    for (std::uint64_t a = 1; a < field.size(); ++a) {
      const std::uint64_t l = field.log(a);
      EXPECT_FALSE(seen[l]);
      seen[l] = true;
    }
    testing::Rng rng(p * 100 + r);
    for (int i = 0; i < 200; ++i) {
      const std::uint64_t a = rng.uniform(1, field.size() - 1);
      const std::uint64_t b = rng.uniform(1, field.size() - 1);
      EXPECT_EQ(field.log(field.mul(a, b)), (field.log(a) + field.log(b)) % (field.size() - 1));
    }
  }
  EXPECT_THROW(FieldExt(2, 30), std::invalid_argument);
}

TEST(CountPoints, ReferenceExamples) {
  EXPECT_EQ(count_points(3, FpPoly{1}, 2), 9);
  EXPECT_EQ(count_points(3, FpPoly{0, 1}, 1), 2);
  EXPECT_EQ(count_points(KummerCover::make(3, 2, {0, 1}), 1), 2);
}

TEST(CountPoints, CoverAgreesWithPairEnumeration) {
  const std::vector<FpPoly> polys{{0, 1}, {1, 1}, {0, 1, 0, 1}, {1, 6, 0, 1}, {2, 0, 1}};
  for (std::uint64_t p : {3, 5, 7})
    for (std::uint64_t d : divisors(p - 1))
      for (const auto& f0 : polys) {
        const FpPoly f = fp_normalize(f0, p);
        if (f.size() <= 1) continue;
        const auto cover = KummerCover::make(p, d, f);
        for (unsigned r = 1; r <= 4; ++r)
          EXPECT_EQ(count_points(cover, r), testing::cover_points_by_pairs(p, d, f, r)) << cover.label() << " r=" << r;
      }
}

TEST(FrobeniusClass, ReferenceExamples) {
  const FieldExt f3(3, 1);
  const auto cover = KummerCover::make(3, 2, {0, 1});
  EXPECT_EQ(frobenius_class(cover, f3, 1), 0u);
  EXPECT_EQ(frobenius_class(cover, f3, 2), 1u);
  EXPECT_THROW(frobenius_class(cover, f3, 0), std::domain_error);
  const auto trivial = KummerCover::make(5, 1, {1, 1});
  for (std::uint64_t x = 0; x < 4; ++x) EXPECT_EQ(frobenius_class(trivial, FieldExt(5, 1), x), 0u);
}

TEST(CensusEngines, AgreeWhereEnumerationIsFeasible) {
  for (std::uint64_t p : {3, 5, 7})
    for (const FpPoly& f : std::vector<FpPoly>{{0, 1}, {1, 1}, {0, 1, 0, 1}, {1, p - 1, 0, 1}}) {
      std::size_t order = 1;
      while (brute_force_feasible(p, order + 1) && order < 8) ++order;
      EXPECT_EQ(norm_census(p, f, order, CensusEngine::kBruteForce), norm_census(p, f, order, CensusEngine::kClosedPoints))
          << "p=" << p;
    }
}

TEST(ZetaSeries, ReferenceExamples) {
  const auto affine = zeta_series_from_counts({3, 9, 27, 81, 243});
  EXPECT_EQ(affine, rational_series(geometric(3, 5)));
  const auto point = zeta_series_from_counts({1, 1, 1, 1});
  EXPECT_EQ(point, rational_series(geometric(1, 4)));
  // A^1 minus a point over F_3: (1 - t)/(1 - 3t) = 1 + 2t + 6t^2 + 18t^3 + 54t^4.
  const auto punctured = zeta_series_base(norm_census(3, {0, 1}, 4));
  EXPECT_EQ(punctured, rational_series({1, 2, 6, 18, 54}));
}

TEST(LSeries, ReferenceExamples) {
  const auto cover = KummerCover::make(3, 2, {0, 1});
  EXPECT_EQ(l_series_kummer(cover, 1, 6), TruncatedLSeries::one(2, 6));
  EXPECT_EQ(l_series_kummer(cover, 0, 6), zeta_series_base(norm_census(3, {0, 1}, 6)).embed(2));
  const auto c5 = KummerCover::make(5, 2, {0, 1, 0, 1});
  const auto census = norm_census(5, c5.f, 8);
  EXPECT_EQ(zeta_series_cover(census, 2).embed(2), l_series_kummer(census, 2, 0) * l_series_kummer(census, 2, 1));
}

TEST(LSeries, ConjugationAndIntegrality) {
  const auto census = norm_census(7, {1, 1}, 8);
  for (std::uint64_t a = 0; a < 6; ++a) {
    const auto L = l_series_kummer(census, 6, a);
    EXPECT_TRUE(L.is_integral());
    for (std::int64_t j : {1, 5}) EXPECT_EQ(L.galois_conjugate(j), l_series_kummer(census, 6, (a * j) % 6));
  }
  EXPECT_TRUE(l_series_kummer(census, 6, 0).is_rational());
}

TEST(PowerSeries, ExpLogRoundTrip) {
  testing::Rng rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const std::uint64_t level = rng.uniform(1, 12);
    std::vector<CyclotomicNumber> c{CyclotomicNumber(level, 1)};
    for (int r = 1; r <= 8; ++r) {
      std::vector<Rational> coeffs(euler_phi(level));
      for (auto& x : coeffs) x = Rational(rng.signed_uniform(-5, 5));
      c.emplace_back(level, std::move(coeffs));
    }
    const TruncatedLSeries s(level, c);
    EXPECT_EQ(s.log().exp(), s);
    EXPECT_EQ(TruncatedLSeries::from_power_sums(level, s.power_sums()), s);
    EXPECT_EQ(s * s.inverse(), TruncatedLSeries::one(level, 8));
    EXPECT_EQ(s.pow(3), s * s * s);
  }
}

TEST(Reconstruction, ReferenceExamples) {
  const auto g = rational_reconstruction(rational_series(geometric(3, 6)), 2);
  const auto* rf = std::get_if<RationalFunction>(&g);
  ASSERT_NE(rf, nullptr);
  EXPECT_EQ(rf->num, (std::vector<CyclotomicNumber>{CyclotomicNumber(1, 1)}));
  EXPECT_EQ(rf->den, (std::vector<CyclotomicNumber>{CyclotomicNumber(1, 1), CyclotomicNumber(1, -3)}));

  const auto punctured = rational_reconstruction(rational_series({1, 2, 6, 18, 54, 162, 486}), 2);
  const auto* pf = std::get_if<RationalFunction>(&punctured);
  ASSERT_NE(pf, nullptr);
  EXPECT_EQ(l_special_value_curve(*pf, 3, 1), CyclotomicNumber(1, Rational(1, 4)));

  const auto one = rational_reconstruction(TruncatedLSeries::one(1, 4), 1);
  const auto* of = std::get_if<RationalFunction>(&one);
  ASSERT_NE(of, nullptr);
  EXPECT_EQ(l_special_value_curve(*of, 5, 2), CyclotomicNumber(1, 1));

  EXPECT_THROW(rational_reconstruction(TruncatedLSeries::one(1, 3), 2), std::invalid_argument);
  // 1/(1-t)^3 needs a denominator of degree 3.
  const auto cubic = rational_reconstruction(rational_series({1, 3, 6, 10, 15, 21, 28}), 2);
  EXPECT_TRUE(std::holds_alternative<InsufficientOrder>(cubic));
}

TEST(Reconstruction, PoleIsSignalled) {
  const auto g = rational_reconstruction(rational_series(geometric(Rational(1, 9), 6)), 2);
  const auto* rf = std::get_if<RationalFunction>(&g);
  ASSERT_NE(rf, nullptr);
  EXPECT_THROW(l_special_value_curve(*rf, 3, 2), std::domain_error);
}

TEST(VerifyLIdentities, SmallCovers) {
  for (const auto& cover : {KummerCover::make(3, 2, {0, 1}), KummerCover::make(5, 4, {0, 1})}) {
    const auto r = verify_l_identities(cover, 8);
    EXPECT_TRUE(r.all_passed()) << r.to_tsv();
  }
  const auto r7 = verify_l_identities(KummerCover::make(7, 3, {1, 1}), 10);
  EXPECT_TRUE(r7.all_passed()) << r7.to_tsv();
}

TEST(KummerCover, Validation) {
  EXPECT_THROW(KummerCover::make(5, 3, {0, 1}), std::invalid_argument);
  EXPECT_THROW(KummerCover::make(6, 1, {0, 1}), std::invalid_argument);
  EXPECT_THROW(KummerCover::make(5, 2, {0}), std::invalid_argument);
  EXPECT_EQ(KummerCover::make(7, 3, {8, 1}).f, (FpPoly{1, 1}));
}

}  // namespace
}  // namespace eqlc::curves
