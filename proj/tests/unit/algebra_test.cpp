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

#include "eqlc/abelian_group.hpp"
#include "eqlc/cochain_complex.hpp"
#include "eqlc/smith.hpp"
#include "support/generators.hpp"

namespace eqlc {
namespace {

IntMatrix random_matrix(testing::Rng& rng, std::size_t r, std::size_t c, long bound) {
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rng.signed_uniform(-bound, bound);
  return m;
}

TEST(SmithNormalForm, ReferenceExamples) {
  EXPECT_TRUE(smith_normal_form(IntMatrix(2, 2)).D.is_zero());
  EXPECT_EQ(smith_normal_form({{2, 0}, {0, 3}}).invariants(), (std::vector<Integer>{1, 6}));
  const auto row = smith_normal_form({{4, 6}});
  EXPECT_EQ(row.D, (IntMatrix{{2, 0}}));
}

TEST(SmithNormalForm, TransformsAreConsistent) {
  testing::Rng rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = random_matrix(rng, rng.uniform(0, 5), rng.uniform(0, 5), 20);
    const SmithForm s = smith_normal_form(m);
    EXPECT_EQ(s.U * m * s.V, s.D);
    const auto inv = s.invariants();
    for (std::size_t i = 0; i + 1 < inv.size(); ++i) EXPECT_EQ(inv[i + 1] % inv[i], 0);
    for (std::size_t i = 0; i < s.D.rows(); ++i)
      for (std::size_t j = 0; j < s.D.cols(); ++j)
        if (i != j || i >= s.rank) EXPECT_EQ(s.D(i, j), 0);
  }
}

TEST(SmithNormalForm, KernelIsAnnihilated) {
  testing::Rng rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const auto m = random_matrix(rng, rng.uniform(1, 4), rng.uniform(1, 6), 6);
    const IntMatrix k = integer_kernel(m);
    if (!k.empty()) EXPECT_TRUE((m * k).is_zero());
    EXPECT_EQ(k.cols() + smith_normal_form(m, false, false).rank, m.cols());
  }
}

TEST(ColumnLattice, MembershipAndCoordinates) {
  const ColumnLattice lattice(IntMatrix{{2, 0}, {0, 3}});
  EXPECT_TRUE(lattice.contains_columns(IntMatrix{{4}, {-3}}));
  EXPECT_FALSE(lattice.contains_columns(IntMatrix{{1}, {0}}));
  EXPECT_THROW(lattice.coordinates(IntMatrix{{1}, {0}}), std::domain_error);
}

TEST(FgAbelianGroup, NormalFormsAndPrinting) {
  EXPECT_EQ(FgAbelianGroup::from_orders({4, 6}).to_string(), "Z/2 + Z/12");
  EXPECT_EQ(FgAbelianGroup::from_orders({3, 7}).to_string(), "Z/21");
  EXPECT_EQ(FgAbelianGroup::cyclic(1), FgAbelianGroup::trivial());
  EXPECT_EQ(FgAbelianGroup::trivial().to_string(), "0");
  EXPECT_EQ(FgAbelianGroup::cyclic(0), FgAbelianGroup::free(1));
  EXPECT_EQ(FgAbelianGroup::from_orders({4, 6}).order(), 24);
  EXPECT_THROW(FgAbelianGroup::free(1).order(), std::domain_error);
  EXPECT_THROW(FgAbelianGroup(0, {4, 6}), std::invalid_argument);
  EXPECT_TRUE(FgAbelianGroup::from_orders({5, 3}).is_cyclic());
}

TEST(Cokernel, PresentationsAgreeWithSmith) {
  EXPECT_EQ(cokernel(IntMatrix{{2, 4}, {6, 8}}), FgAbelianGroup::from_orders({2, 4}));
  const PresentedAbelianGroup g(2, IntMatrix{{3}, {0}});
  EXPECT_EQ(g.normal_form(), (FgAbelianGroup(1, {3})));
}

TEST(Cohomology, ReferenceExamples) {
  // 0 -> Z --x5--> Z -> 0
  const BoundedComplex z(0, {PresentedAbelianGroup::free(1), PresentedAbelianGroup::free(1)}, {IntMatrix{{5}}});
  EXPECT_EQ(cohomology(z, 1), FgAbelianGroup::cyclic(5));
  EXPECT_EQ(cohomology(z, 0), FgAbelianGroup::trivial());

  // 0 -> Z/3 --x5--> Z/15 -> 0
  const BoundedComplex c(0, {PresentedAbelianGroup::cyclic(3), PresentedAbelianGroup::cyclic(15)}, {IntMatrix{{5}}});
  EXPECT_EQ(cohomology(c, 1), FgAbelianGroup::cyclic(5));
  EXPECT_EQ(cohomology(c, 0), FgAbelianGroup::trivial());
  EXPECT_EQ(cohomology(c, 7), FgAbelianGroup::trivial());

  const BoundedComplex zero(0, {PresentedAbelianGroup::cyclic(4), PresentedAbelianGroup::cyclic(9)}, {IntMatrix{{0}}});
  EXPECT_EQ(cohomology(zero, 0), FgAbelianGroup::cyclic(4));
  EXPECT_EQ(cohomology(zero, 1), FgAbelianGroup::cyclic(9));
}

TEST(BoundedComplex, RejectsMalformedDifferentials) {
  // x1 : Z/3 -> Z/5 is not well defined.
  EXPECT_THROW(BoundedComplex(0, {PresentedAbelianGroup::cyclic(3), PresentedAbelianGroup::cyclic(5)}, {IntMatrix{{1}}}),
               std::invalid_argument);
  // Z -> Z -> Z with both maps x1 does not square to zero.
  EXPECT_THROW(BoundedComplex(0, {PresentedAbelianGroup::free(1), PresentedAbelianGroup::free(1), PresentedAbelianGroup::free(1)},
                              {IntMatrix{{1}}, IntMatrix{{1}}}),
               std::invalid_argument);
}

TEST(EulerNumber, ReferenceExamples) {
  EXPECT_EQ(euler_number(BoundedComplex(0, {PresentedAbelianGroup::cyclic(15)}, {})), Rational(15));
  EXPECT_EQ(euler_number(BoundedComplex(-1, {PresentedAbelianGroup::cyclic(3), PresentedAbelianGroup::cyclic(15)}, {IntMatrix{{5}}})),
            Rational(5));
  EXPECT_EQ(euler_number(BoundedComplex()), Rational(1));
  EXPECT_THROW(euler_number(BoundedComplex(0, {PresentedAbelianGroup::free(1)}, {})), std::domain_error);
}

TEST(EulerNumber, InvariantUnderCohomology) {
  testing::Rng rng(99);
  for (int trial = 0; trial < 150; ++trial) {
    const int lo = static_cast<int>(rng.signed_uniform(-3, 1));
    const int length = static_cast<int>(rng.uniform(1, 4));
    const BoundedComplex c = testing::random_finite_complex(rng, lo, length);
    std::vector<FgAbelianGroup> h;
    for (int i = c.lo(); i <= c.hi(); ++i) h.push_back(cohomology(c, i));
    EXPECT_EQ(euler_number(c), euler_number(c.lo(), h)) << "trial " << trial;
  }
}

}  // namespace
}  // namespace eqlc
