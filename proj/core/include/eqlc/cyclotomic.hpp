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

#include "eqlc/abelian_group.hpp"
#include "eqlc/int_matrix.hpp"
#include "eqlc/poly.hpp"

namespace eqlc {

// Phi_m with integer coefficients, little-endian. Results are memoized.
const std::vector<Integer>& cyclotomic_coefficients(std::uint64_t m);
QPoly cyclotomic_polynomial(std::uint64_t m);

// An element of Q(zeta_m) written in the power basis 1, zeta, ..., zeta^{phi(m)-1}.
// Arithmetic between different levels throws std::invalid_argument; use
// embed() to move an element up to a multiple level explicitly.
class CyclotomicNumber {
 public:
  CyclotomicNumber() : CyclotomicNumber(1) {}
  explicit CyclotomicNumber(std::uint64_t level);
  CyclotomicNumber(std::uint64_t level, const Rational& value);
  // Reduces an arbitrary-length coefficient vector modulo Phi_level.
  CyclotomicNumber(std::uint64_t level, std::vector<Rational> coeffs);

  // zeta_level^k for any integer k.
  static CyclotomicNumber zeta_power(std::uint64_t level, std::int64_t k);

  std::uint64_t level() const { return level_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_integral() const;
  bool is_rational() const;
  // Throws std::domain_error unless is_rational().
  Rational rational_value() const;

  CyclotomicNumber inverse() const;
  // zeta -> zeta^j; requires gcd(j, level) == 1.
  CyclotomicNumber galois_conjugate(std::int64_t j) const;
  // Product of all Galois conjugates.
  Rational norm_to_Q() const;
  // Image under zeta_level -> zeta_target^{target/level}.
  CyclotomicNumber embed(std::uint64_t target_level) const;

  // Matrix of multiplication by this element in the power basis
  // (column i is this * zeta^i). Requires integral coefficients.
  IntMatrix multiplication_matrix() const;

  // A rational prints as "num/den"; otherwise "[c_0, c_1, ...]@m".
  std::string to_string() const;

  CyclotomicNumber& operator+=(const CyclotomicNumber& o);
  CyclotomicNumber& operator-=(const CyclotomicNumber& o);
  CyclotomicNumber& operator*=(const CyclotomicNumber& o);

  friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
  friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
  friend CyclotomicNumber operator*(CyclotomicNumber a, const CyclotomicNumber& b) { return a *= b; }
  friend CyclotomicNumber operator*(const Rational& c, CyclotomicNumber a);
  friend CyclotomicNumber operator/(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    return a * b.inverse();
  }
  friend CyclotomicNumber operator-(CyclotomicNumber a);
  friend bool operator==(const CyclotomicNumber&, const CyclotomicNumber&) = default;

 private:
  void check_level(const CyclotomicNumber& o) const;

  std::uint64_t level_ = 1;
  std::vector<Rational> coeffs_;
};

// Z[zeta_m]/(z) in invariant-factor form. Requires z integral and nonzero.
FgAbelianGroup quotient_by_principal(std::uint64_t m, const CyclotomicNumber& z);

}  // namespace eqlc
