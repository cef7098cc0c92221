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

#include "eqlc/ff_qlc.hpp"
#include "eqlc/mackey.hpp"

namespace eqlc::ffqlc {
namespace {

FgAbelianGroup zmod(long n) { return FgAbelianGroup::cyclic(n); }

const ReportEntry* find(const VerificationReport& r, const std::string& quantity, const std::string& path) {
  for (const auto& e : r.entries())
    if (e.quantity == quantity && e.path == path) return &e;
  return nullptr;
}

TEST(CyclicCharacter, EffectiveOrder) {
  EXPECT_EQ((CyclicCharacter{12, 8}.effective_order()), 3u);
  EXPECT_EQ((CyclicCharacter{12, 8}.primitive_exponent()), 2u);
  EXPECT_TRUE((CyclicCharacter{12, 5}.is_primitive()));
  EXPECT_TRUE((CyclicCharacter{12, 0}.is_trivial()));
}

TEST(KGroupFiniteField, ReferenceExamples) {
  EXPECT_EQ(k_group_finite_field(2, 1), zmod(1));
  EXPECT_EQ(k_group_finite_field(4, 1), zmod(3));
  EXPECT_EQ(k_group_finite_field(2, 4), zmod(1));
  EXPECT_EQ(k_group_finite_field(3, 5), zmod(26));
  EXPECT_EQ(k_group_finite_field(5, 0), FgAbelianGroup::free(1));
  EXPECT_THROW(k_group_finite_field(6, 1), std::invalid_argument);
  EXPECT_THROW(k_group_finite_field(1, 1), std::invalid_argument);
}

TEST(KMackeyFiniteField, ReferenceExamples) {
  const auto a = k_mackey_finite_field(2, 2, 1);
  EXPECT_EQ(a.value(1).normal_form(), zmod(3));
  EXPECT_EQ(a.value(2).normal_form(), zmod(1));

  const auto b = k_mackey_finite_field(3, 2, 1);
  EXPECT_EQ(b.value(1).normal_form(), zmod(8));
  EXPECT_EQ(b.value(2).normal_form(), zmod(2));
  EXPECT_EQ(b.ext(2, 1), (IntMatrix{{4}}));

  const auto c = k_mackey_finite_field(2, 6, 1);
  EXPECT_EQ(c.value(1).normal_form(), zmod(63));
  EXPECT_EQ(c.value(2).normal_form(), zmod(7));
  EXPECT_EQ(c.value(3).normal_form(), zmod(3));
  EXPECT_EQ(c.value(6).normal_form(), zmod(1));
  EXPECT_EQ(c.ext(2, 1), (IntMatrix{{9}}));
  EXPECT_EQ(c.ext(3, 1), (IntMatrix{{21}}));

  EXPECT_THROW(k_mackey_finite_field(2, 2, 2), std::invalid_argument);
}

TEST(ArtinLValue, ReferenceExamples) {
  EXPECT_EQ(artin_l_value_ff(2, {1, 0}, 1), CyclotomicNumber(1, -1));
  EXPECT_EQ(artin_l_value_ff(2, {2, 1}, 1).rational_value(), Rational(1, 3));
  const CyclotomicNumber expected = Rational(1, 7) * CyclotomicNumber(3, std::vector<Rational>{1, 0, -2});
  EXPECT_EQ(artin_l_value_ff(2, {3, 1}, 1), expected);
}

TEST(MoebiusZetaProduct, ReferenceExamples) {
  EXPECT_EQ(moebius_zeta_product_ff(2, 2, 1), Rational(1, 3));
  EXPECT_EQ(moebius_zeta_product_ff(2, 1, 1), Rational(-1));
  EXPECT_EQ(moebius_zeta_product_ff(2, 6, 1), Rational(1, 3));
}

TEST(EquivariantK, ReferenceExamples) {
  EXPECT_EQ(equivariant_k_finite_field(2, CyclicCharacter{2, 1}, 1), zmod(3));
  EXPECT_EQ(equivariant_k_finite_field(2, CyclicCharacter{2, 0}, 1), zmod(1));
  EXPECT_EQ(equivariant_k_finite_field(2, CyclicCharacter{4, 1}, 1), zmod(5));
  EXPECT_TRUE(equivariant_k_finite_field(3, CyclicCharacter{4, 1}, 2).is_trivial());
}

TEST(EquivariantK, GoldenQuadraticCase) {
  for (long q : {2, 3, 4, 5})
    for (std::uint64_t k = 1; k <= 6; ++k) {
      const Integer qk = ipow(Integer(q), k);
      EXPECT_EQ(equivariant_k_finite_field(q, CyclicCharacter{2, 1}, 2 * k - 1), FgAbelianGroup::cyclic(qk + 1));
      EXPECT_TRUE(equivariant_k_finite_field(q, CyclicCharacter{2, 1}, 2 * k).is_trivial());
    }
}

TEST(VerifyMainTheorem, ReferenceExamples) {
  const auto r1 = verify_main_theorem_ff(2, {2, 1}, 1);
  EXPECT_TRUE(r1.all_passed());
  EXPECT_EQ(find(r1, "norm_L", "signed_k_ratio")->value, "1/3");
  EXPECT_EQ(find(r1, "pi_odd", "bredon_e2")->value, "Z/3");

  const auto r2 = verify_main_theorem_ff(3, {2, 1}, 1);
  EXPECT_TRUE(r2.all_passed());
  EXPECT_EQ(find(r2, "norm_L", "conjugate_product")->value, "1/4");
  EXPECT_EQ(find(r2, "pi_odd", "principal_quotient")->value, "Z/4");

  const auto r3 = verify_main_theorem_ff(2, {6, 1}, 1);
  EXPECT_TRUE(r3.all_passed());
  EXPECT_EQ(find(r3, "norm_L", "moebius_zeta")->value, "1/3");
  EXPECT_EQ(find(r3, "pi_odd_order", "gcd_closed_form")->value, "3");
}

TEST(VerifyMainTheorem, TrivialCharacterCarriesMinusSign) {
  const auto r = verify_main_theorem_ff(3, {4, 0}, 2);
  EXPECT_TRUE(r.all_passed());
  // L = 1/(1 - 9) and #pi_4 / #pi_3 = 1/8, so the sign is -1.
  EXPECT_EQ(find(r, "norm_L", "signed_k_ratio")->value, "-1/8");
}

TEST(VerifyMainTheorem, PrimePowerBase) {
  for (std::uint64_t m = 1; m <= 3; ++m)
    for (std::uint64_t a = 0; a < m; ++a)
      for (std::uint64_t k = 1; k <= 2; ++k) EXPECT_TRUE(verify_main_theorem_ff(4, {m, a}, k).all_passed());
}

TEST(InducedRep, ValidatesAndVerifies) {
  EXPECT_THROW((InducedRepFF{6, {{4, 1, 1}}}.validate()), std::invalid_argument);
  EXPECT_THROW((InducedRepFF{6, {{3, 1, 0}}}.validate()), std::invalid_argument);
  const InducedRepFF rho{6, {{3, 1, 2}, {2, 0, 1}, {1, 0, 1}}};
  const auto r = verify_induced_ff(2, rho, 2);
  EXPECT_TRUE(r.all_passed());
  EXPECT_EQ(find(r, "pi_odd", "bredon_induced")->value, "Z/21 + Z/273 + Z/819 + Z/4095");
}

}  // namespace
}  // namespace eqlc::ffqlc
