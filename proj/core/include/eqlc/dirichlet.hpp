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
#include <memory>
#include <optional>
#include <vector>

#include "eqlc/cyclotomic.hpp"
#include "eqlc/poly.hpp"
#include "eqlc/report.hpp"

namespace eqlc::dirichlet {

struct UnitGenerator {
  std::uint64_t generator = 1;
  std::uint64_t order = 1;
};

// (Z/N)^x as a product of cyclic factors: the 2-part first (-1 for 4;
// -1 and 3 for 2^e, e >= 3), then odd primes in increasing order, each
// generator lifted by CRT to be 1 modulo the other prime powers.
std::vector<UnitGenerator> unit_group(std::uint64_t N);

// Unit group with discrete logs for every residue.
class UnitGroup {
 public:
  explicit UnitGroup(std::uint64_t N);

  std::uint64_t modulus() const { return N_; }
  const std::vector<UnitGenerator>& generators() const { return gens_; }
  std::uint64_t order() const { return order_; }
  // lcm of the generator orders.
  std::uint64_t exponent() const { return exponent_; }
  bool is_unit(std::uint64_t a) const;
  // Exponents k_i with a = prod g_i^{k_i}; empty optional for non-units.
  const std::optional<std::vector<std::uint64_t>>& log(std::uint64_t a) const { return logs_[a % N_]; }
  std::vector<std::uint64_t> elements() const;

 private:
  std::uint64_t N_;
  std::vector<UnitGenerator> gens_;
  std::uint64_t order_ = 1;
  std::uint64_t exponent_ = 1;
  std::vector<std::optional<std::vector<std::uint64_t>>> logs_;
};

class DirichletCharacter {
 public:
  // chi(g_i) = zeta_{ord_i}^{exponents[i]}.
  DirichletCharacter(std::shared_ptr<const UnitGroup> group, std::vector<std::uint64_t> exponents);

  // Every character mod N, ordered lexicographically by exponent vector.
  static std::vector<DirichletCharacter> all(std::uint64_t N);

  std::uint64_t modulus() const { return group_->modulus(); }
  const std::vector<std::uint64_t>& exponents() const { return exponents_; }
  std::uint64_t order() const { return order_; }
  bool is_trivial() const { return order_ == 1; }

  // chi(a) = zeta_{group exponent}^{e}; nullopt for non-units.
  std::optional<std::uint64_t> exponent_at(std::uint64_t a) const;
  // chi(a) in Q(zeta_order()), zero for non-units.
  CyclotomicNumber value(std::uint64_t a) const;
  // chi(-1) as +1 or -1.
  int parity() const;
  bool is_trivial_on(const std::vector<std::uint64_t>& subgroup) const;

  // sigma_j o chi, i.e. chi^j; j must be a unit mod order().
  DirichletCharacter galois_conjugate(std::uint64_t j) const;

  std::uint64_t conductor() const;
  // The primitive character mod conductor() inducing this one.
  DirichletCharacter primitivize() const;

 private:
  std::shared_ptr<const UnitGroup> group_;
  std::vector<std::uint64_t> exponents_;
  std::uint64_t order_ = 1;
};

// B_k(x) with B_1(x) = x - 1/2.
QPoly bernoulli_polynomial(std::uint64_t k);
Rational bernoulli_number(std::uint64_t k);

// f^{k-1} sum_{a=1}^{f} chi(a) B_k(a/f) for chi primitive mod f.
CyclotomicNumber generalized_bernoulli(const DirichletCharacter& chi, std::uint64_t k);

// L(1-k, chi) of the primitive character attached to chi, in Q(zeta_order).
// Throws std::domain_error at the pole (trivial chi, k = 1).
CyclotomicNumber dirichlet_l_value(const DirichletCharacter& chi, std::uint64_t k);

// Subgroups are given as residue lists; validated for closure.
void require_subgroup(std::uint64_t N, const std::vector<std::uint64_t>& subgroup);

// zeta_{F'}(1-k) for the fixed field F' of H in Q(zeta_N).
Rational dedekind_zeta_abelian(std::uint64_t N, const std::vector<std::uint64_t>& H, std::uint64_t k);

// Degree of the fixed field and whether it is totally real.
std::uint64_t fixed_field_degree(std::uint64_t N, const std::vector<std::uint64_t>& H);
bool contains_minus_one(std::uint64_t N, const std::vector<std::uint64_t>& H);

// {g : g^s in H}.
std::vector<std::uint64_t> power_preimage(std::uint64_t N, const std::vector<std::uint64_t>& H, std::uint64_t s);

// Order of (Z/N)^x / H when cyclic, nullopt otherwise.
std::optional<std::uint64_t> cyclic_quotient_order(std::uint64_t N, const std::vector<std::uint64_t>& H);

// All subgroups of (Z/N)^x, each sorted, in a deterministic order.
std::vector<std::vector<std::uint64_t>> all_subgroups(std::uint64_t N);

// Borel's table: r_1 + r_2 for odd k > 1, r_2 for even k.
std::uint64_t zeta_order_of_vanishing(std::uint64_t N, const std::vector<std::uint64_t>& H, std::uint64_t k);

VerificationReport verify_norm_identity_numberfield(std::uint64_t N, const std::vector<std::uint64_t>& H, std::uint64_t n);
VerificationReport verify_order_identity(std::uint64_t N, const std::vector<std::uint64_t>& H, std::uint64_t k);

// zeta_{F'}(1-2n) / ((-1)^n 2)^{r_1}; requires -1 in H.
Rational predict_k_ratio(std::uint64_t N, const std::vector<std::uint64_t>& H, std::uint64_t n);
VerificationReport prediction_record(std::uint64_t N, const std::vector<std::uint64_t>& H, std::uint64_t n);

}  // namespace eqlc::dirichlet
