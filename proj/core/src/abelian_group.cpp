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

#include "eqlc/abelian_group.hpp"

#include <sstream>
#include <stdexcept>

#include "eqlc/smith.hpp"

namespace eqlc {

FgAbelianGroup::FgAbelianGroup(std::size_t rank, std::vector<Integer> invariant_factors)
    : rank_(rank), invariant_factors_(std::move(invariant_factors)) {
  for (std::size_t i = 0; i < invariant_factors_.size(); ++i) {
    if (invariant_factors_[i] < 2)
      throw std::invalid_argument("FgAbelianGroup: invariant factors must be >= 2");
    if (i > 0 && !mpz_divisible_p(invariant_factors_[i].get_mpz_t(),
                                  invariant_factors_[i - 1].get_mpz_t()))
      throw std::invalid_argument("FgAbelianGroup: invariant factors must form a divisibility chain");
  }
}

FgAbelianGroup FgAbelianGroup::cyclic(const Integer& n) {
  return from_orders({n});
}

FgAbelianGroup FgAbelianGroup::from_orders(const std::vector<Integer>& orders) {
  return cokernel(IntMatrix::diagonal(orders));
}

Integer FgAbelianGroup::order() const {
  if (rank_ != 0) throw std::domain_error("FgAbelianGroup::order: group is infinite");
  Integer n = 1;
  for (const auto& d : invariant_factors_) n *= d;
  return n;
}

FgAbelianGroup FgAbelianGroup::direct_sum(const FgAbelianGroup& other) const {
  std::vector<Integer> orders = invariant_factors_;
  orders.insert(orders.end(), other.invariant_factors_.begin(), other.invariant_factors_.end());
  orders.insert(orders.end(), rank_ + other.rank_, Integer(0));
  return from_orders(orders);
}

std::string FgAbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (rank_ > 0) {
    os << 'Z';
    if (rank_ > 1) os << '^' << rank_;
    first = false;
  }
  for (const auto& d : invariant_factors_) {
    if (!first) os << " + ";
    os << "Z/" << d.get_str();
    first = false;
  }
  return os.str();
}

PresentedAbelianGroup::PresentedAbelianGroup(std::size_t generators, IntMatrix relations)
    : generators_(generators), relations_(std::move(relations)) {
  if (relations_.rows() != generators_)
    throw std::invalid_argument("PresentedAbelianGroup: relation matrix needs one row per generator");
}

PresentedAbelianGroup PresentedAbelianGroup::cyclic(const Integer& n) {
  IntMatrix rel(1, 1);
  rel(0, 0) = abs(n);
  return {1, rel};
}

PresentedAbelianGroup PresentedAbelianGroup::free(std::size_t n) {
  return {n, IntMatrix(n, 0)};
}

FgAbelianGroup PresentedAbelianGroup::normal_form() const {
  return cokernel(relations_);
}

PresentedAbelianGroup PresentedAbelianGroup::direct_sum(const PresentedAbelianGroup& other) const {
  return {generators_ + other.generators_, IntMatrix::direct_sum(relations_, other.relations_)};
}

FgAbelianGroup cokernel(const IntMatrix& m) {
  const SmithForm s = smith_normal_form(m, false, false);
  std::vector<Integer> factors;
  for (const auto& d : s.invariants())
    if (d != 1) factors.push_back(d);
  return FgAbelianGroup(m.rows() - s.rank, std::move(factors));
}

}  // namespace eqlc
