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
#include <vector>

namespace eqlc::curves {

// Polynomial over F_p, little-endian, coefficients in [0, p), no trailing zeros.
using FpPoly = std::vector<std::uint64_t>;

FpPoly fp_normalize(FpPoly a, std::uint64_t p);
FpPoly fp_sub(const FpPoly& a, const FpPoly& b, std::uint64_t p);
FpPoly fp_mul(const FpPoly& a, const FpPoly& b, std::uint64_t p);
FpPoly fp_mod(const FpPoly& a, const FpPoly& m, std::uint64_t p);
FpPoly fp_gcd(FpPoly a, FpPoly b, std::uint64_t p);
// base^e mod m.
FpPoly fp_powmod(const FpPoly& base, std::uint64_t e, const FpPoly& m, std::uint64_t p);
std::uint64_t fp_eval(const FpPoly& f, std::uint64_t x, std::uint64_t p);
std::uint64_t fp_inverse(std::uint64_t a, std::uint64_t p);

// Rabin-style test: gcd(f, x^{p^i} - x) = 1 for 1 <= i <= deg/2.
bool fp_is_irreducible(const FpPoly& f, std::uint64_t p);
// First monic irreducible of the given degree, ordering candidates by the
// base-p integer of their lower coefficients.
FpPoly first_irreducible(std::uint64_t p, unsigned degree);

// Determinant of multiplication by h on F_p[x]/(m), m monic.
std::uint64_t fp_norm_det(const FpPoly& h, const FpPoly& m, std::uint64_t p);

// F_{p^r} as F_p[x]/(modulus). Elements are encoded as integers
// sum a_i p^i < p^r; discrete logs are taken with respect to a fixed
// primitive element. Tables are dense, so p^r is capped at kMaxSize.
class FieldExt {
 public:
  static constexpr std::uint64_t kMaxSize = std::uint64_t{1} << 21;

  FieldExt(std::uint64_t p, unsigned r);

  std::uint64_t p() const { return p_; }
  unsigned degree() const { return r_; }
  std::uint64_t size() const { return q_; }
  const FpPoly& modulus() const { return modulus_; }

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t add_constant(std::uint64_t a, std::uint64_t c) const;
  // Horner evaluation of an F_p polynomial at an encoded element.
  std::uint64_t eval(const FpPoly& f, std::uint64_t x) const;

  // Discrete log of a nonzero encoded element, in [0, p^r - 1).
  std::uint64_t log(std::uint64_t a) const { return log_[a]; }

  // Discrete log, base the smallest primitive root g mod p, of the norm
  // down to F_p of a nonzero element.
  std::uint64_t norm_class(std::uint64_t a) const;

 private:
  std::uint64_t p_;
  unsigned r_;
  std::uint64_t q_;
  FpPoly modulus_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> exp_;
  // dlog_g of the norm of the primitive element.
  std::uint64_t kappa_ = 0;
};

}  // namespace eqlc::curves
