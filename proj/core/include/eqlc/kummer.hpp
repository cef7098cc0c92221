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
#include <string>
#include <vector>

#include "eqlc/power_series.hpp"
#include "eqlc/prime_field.hpp"
#include "eqlc/report.hpp"

namespace eqlc::curves {

// y^d = f(x) over the complement X of the zeros of f in the affine line.
// d must divide p - 1. mu_d is identified with Z/d through the smallest
// primitive root g mod p.
struct KummerCover {
  std::uint64_t p = 3;
  std::uint64_t d = 1;
  FpPoly f{1};
  std::uint64_t g = 2;

  // Reduces f mod p, picks g and validates; throws std::invalid_argument.
  static KummerCover make(std::uint64_t p, std::uint64_t d, FpPoly f);
  std::string label() const;
};

// census[r][c] = #{x in F_{p^r} : f(x) != 0, dlog_g Norm f(x) = c} for
// c in Z/(p-1) and 1 <= r <= B; census[0] is empty.
using NormCensus = std::vector<std::vector<Integer>>;

enum class CensusEngine { kAuto, kBruteForce, kClosedPoints };

// kBruteForce enumerates F_{p^r} and throws when p^r exceeds the table
// budget. kClosedPoints takes the logarithm of the multiplicative
// generating function of all monic polynomials graded by their resultant
// with f. kAuto enumerates when possible.
NormCensus norm_census(std::uint64_t p, const FpPoly& f, std::size_t order, CensusEngine engine = CensusEngine::kAuto);

bool brute_force_feasible(std::uint64_t p, std::size_t r);

// Power residue class in Z/d of a point x of X(F_{p^r}), encoded in field.
std::uint64_t frobenius_class(const KummerCover& cover, const FieldExt& field, std::uint64_t x);

Integer count_points_base(const NormCensus& census, std::size_t r);
// Points of y^d = f(x) with f(x) != 0.
Integer count_points_cover(const NormCensus& census, std::uint64_t d, std::size_t r);
Integer count_points(std::uint64_t p, const FpPoly& f, std::size_t r);
Integer count_points(const KummerCover& cover, std::size_t r);

// Rational series exp(sum N_r t^r / r) for counts N_1..N_B.
TruncatedLSeries zeta_series_from_counts(const std::vector<Integer>& counts);
TruncatedLSeries zeta_series_base(const NormCensus& census);
TruncatedLSeries zeta_series_cover(const NormCensus& census, std::uint64_t d);

// L(X, chi^a) at level d.
TruncatedLSeries l_series_kummer(const NormCensus& census, std::uint64_t d, std::uint64_t a);
TruncatedLSeries l_series_kummer(const KummerCover& cover, std::uint64_t a, std::size_t order);

// L(Y/C_e, psi_b) at level e for the C_e-cover Y -> Y/C_e, where Y/C_e is
// z^{d/e} = f(x).
TruncatedLSeries intermediate_l_series(const NormCensus& census, std::uint64_t d, std::uint64_t e, std::uint64_t b);

VerificationReport verify_l_identities(const KummerCover& cover, std::size_t order);
// Same, with a census already computed to at least `order`.
VerificationReport verify_l_identities(const KummerCover& cover, std::size_t order, const NormCensus& census);

// Census rows computed by both engines wherever enumeration is feasible,
// reported as one agreement record per degree.
VerificationReport cross_check_census(std::uint64_t p, const FpPoly& f, std::size_t order, NormCensus* merged);

}  // namespace eqlc::curves
