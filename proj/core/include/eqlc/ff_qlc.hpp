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

#include "eqlc/abelian_group.hpp"
#include "eqlc/cyclotomic.hpp"
#include "eqlc/mackey.hpp"
#include "eqlc/report.hpp"

namespace eqlc::ffqlc {

// chi(generator of C_m) = zeta_m^a.
struct CyclicCharacter {
  std::uint64_t m = 1;
  std::uint64_t a = 0;

  std::uint64_t effective_order() const;
  // Exponent of the induced primitive character of C_{effective_order()}.
  std::uint64_t primitive_exponent() const;
  bool is_primitive() const { return effective_order() == m; }
  bool is_trivial() const { return effective_order() == 1; }
};

struct InducedSummand {
  std::uint64_t h = 1;
  std::uint64_t a = 0;
  std::uint64_t mult = 1;
};

// The sum over summands of Ind_{C_h}^{C_m} chi_{h,a}, each repeated mult times.
struct InducedRepFF {
  std::uint64_t m = 1;
  std::vector<InducedSummand> summands;

  // Throws std::invalid_argument on h not dividing m or mult == 0.
  void validate() const;
};

// Throws std::invalid_argument unless q is a prime power >= 2.
void require_prime_power(const Integer& q);

// Z for t = 0, Z/(q^n - 1) for t = 2n - 1, trivial otherwise.
FgAbelianGroup k_group_finite_field(const Integer& q, std::uint64_t t);

// K_t of F_{q^{m/d}} at the orbit C_m/C_d with the base-change maps. Only
// odd t is accepted.
equivariant::CyclicMackeyData k_mackey_finite_field(const Integer& q, std::uint64_t m, std::uint64_t t);

// 1/(1 - zeta^{a'} q^k) at the effective level of chi.
CyclotomicNumber artin_l_value_ff(const Integer& q, const CyclicCharacter& chi, std::uint64_t k);

Rational moebius_zeta_product_ff(const Integer& q, std::uint64_t m, std::uint64_t k);

// Equivariant K-group pi_t with coefficients in the Moore object of chi,
// assembled from the Bredon E_2 page after descent to the effective order.
// Throws std::domain_error if two E_2 entries contribute to the same total
// degree, since the extension would then be undetermined.
FgAbelianGroup equivariant_k_finite_field(const Integer& q, const CyclicCharacter& chi, std::uint64_t t);
FgAbelianGroup equivariant_k_finite_field(const Integer& q, const InducedRepFF& rho, std::uint64_t t);

VerificationReport verify_main_theorem_ff(const Integer& q, const CyclicCharacter& chi, std::uint64_t k);
VerificationReport verify_induced_ff(const Integer& q, const InducedRepFF& rho, std::uint64_t k);

}  // namespace eqlc::ffqlc
