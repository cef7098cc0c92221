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
#include <map>
#include <utility>
#include <vector>

#include "eqlc/abelian_group.hpp"
#include "eqlc/cochain_complex.hpp"

namespace eqlc::equivariant {

// Restriction-only Mackey data for the cyclic group C_m. value(d) is the
// group attached to the orbit C_m/C_d; for d | d' the map ext(d', d) sends
// value(d') into value(d). Transfers are not modelled.
class CyclicMackeyData {
 public:
  using ExtMap = std::map<std::pair<std::uint64_t, std::uint64_t>, IntMatrix>;

  // `values` must contain every divisor of m. `ext` must contain at least
  // the maps ext(d', d) with d'/d prime; the remaining pairs are filled in by
  // composition. Identity maps may be omitted. Construction checks that
  // every map is well defined on presentations and that composition is
  // functorial; violations throw std::invalid_argument.
  CyclicMackeyData(std::uint64_t m, std::map<std::uint64_t, PresentedAbelianGroup> values,
                   ExtMap ext);

  std::uint64_t m() const { return m_; }
  const std::vector<std::uint64_t>& divisors() const { return divisors_; }
  const PresentedAbelianGroup& value(std::uint64_t d) const;
  const IntMatrix& ext(std::uint64_t d_prime, std::uint64_t d) const;

 private:
  std::uint64_t m_;
  std::vector<std::uint64_t> divisors_;
  std::map<std::uint64_t, PresentedAbelianGroup> values_;
  ExtMap ext_;
};

// Cellular cochain complex of the cyclotomic Moore object with coefficients
// in M, living in degrees [-lambda, 0].
BoundedComplex moore_cochain_complex(const CyclicMackeyData& data);

// Throws std::out_of_range unless -lambda <= s <= 0.
FgAbelianGroup bredon_cohomology(const CyclicMackeyData& data, int s);

// value(1) modulo the images of ext(p, 1) over the primes p | m.
FgAbelianGroup h0_fixed_point_oracle(const CyclicMackeyData& data);

// Kernels of (u^{m/d} - 1) on Z/mod with subgroup inclusions as maps.
CyclicMackeyData cyclic_fixed_point_mackey(std::uint64_t mod, std::uint64_t u, std::uint64_t m);

// Data for the quotient C_m / C_g: the new value at e | m/g is value(e*g).
CyclicMackeyData restrict_to_quotient(const CyclicMackeyData& data, std::uint64_t g);

// Cech complex of the subgroups <g_i> of Z/modulus (each g_i divides the
// modulus): degree -s carries the intersections over s-element index sets,
// degree 0 the whole group.
BoundedComplex cech_intersection_complex(std::uint64_t modulus,
                                         const std::vector<std::uint64_t>& generators);

}  // namespace eqlc::equivariant
