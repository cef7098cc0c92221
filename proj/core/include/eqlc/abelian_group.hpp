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

#include <cstddef>
#include <string>
#include <vector>

#include "eqlc/int_matrix.hpp"

namespace eqlc {

// Z^rank + Z/d_1 + ... + Z/d_k with d_1 | d_2 | ... | d_k and every d_i >= 2.
class FgAbelianGroup {
 public:
  FgAbelianGroup() = default;
  // Validates the divisibility chain; throws std::invalid_argument otherwise.
  FgAbelianGroup(std::size_t rank, std::vector<Integer> invariant_factors);

  static FgAbelianGroup trivial() { return {}; }
  static FgAbelianGroup free(std::size_t rank) { return {rank, {}}; }
  // Z/n; n == 0 gives Z and n == 1 gives the trivial group.
  static FgAbelianGroup cyclic(const Integer& n);
  // Normal form of Z^{torsion.size()} / diag(torsion).
  static FgAbelianGroup from_orders(const std::vector<Integer>& orders);

  std::size_t rank() const { return rank_; }
  const std::vector<Integer>& invariant_factors() const { return invariant_factors_; }

  bool is_finite() const { return rank_ == 0; }
  bool is_trivial() const { return rank_ == 0 && invariant_factors_.empty(); }
  bool is_cyclic() const { return rank_ + invariant_factors_.size() <= 1; }
  // Group order; throws std::domain_error for infinite groups.
  Integer order() const;

  FgAbelianGroup direct_sum(const FgAbelianGroup& other) const;

  // "0", "Z/3", "Z^2 + Z/2 + Z/4".
  std::string to_string() const;

  friend bool operator==(const FgAbelianGroup&, const FgAbelianGroup&) = default;

 private:
  std::size_t rank_ = 0;
  std::vector<Integer> invariant_factors_;
};

// Z^n / (column span of relations); relations has n rows.
class PresentedAbelianGroup {
 public:
  PresentedAbelianGroup() = default;
  PresentedAbelianGroup(std::size_t generators, IntMatrix relations);

  // Z/n on one generator (n == 0 gives Z).
  static PresentedAbelianGroup cyclic(const Integer& n);
  static PresentedAbelianGroup free(std::size_t n);
  static PresentedAbelianGroup zero() { return free(0); }

  std::size_t generators() const { return generators_; }
  const IntMatrix& relations() const { return relations_; }

  FgAbelianGroup normal_form() const;

  PresentedAbelianGroup direct_sum(const PresentedAbelianGroup& other) const;

 private:
  std::size_t generators_ = 0;
  IntMatrix relations_ = IntMatrix(0, 0);
};

// Normal form of Z^{rows} / (column span of M).
FgAbelianGroup cokernel(const IntMatrix& m);

}  // namespace eqlc
