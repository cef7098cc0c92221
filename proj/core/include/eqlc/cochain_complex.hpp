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

#include <vector>

#include "eqlc/abelian_group.hpp"

namespace eqlc {

// A finite cochain complex of presented abelian groups
//
//   C^lo --d^lo--> C^{lo+1} --> ... --> C^hi
//
// with cohomological (increasing) differentials. d^i is a matrix with
// C^{i+1}.generators() rows and C^i.generators() columns acting on
// generators. Construction checks that every differential respects the
// relations and that d^{i+1} d^i lands in the relation submodule.
class BoundedComplex {
 public:
  // Empty complex.
  BoundedComplex() = default;
  // terms.size() == hi - lo + 1, differentials.size() == terms.size() - 1.
  BoundedComplex(int lo, std::vector<PresentedAbelianGroup> terms,
                 std::vector<IntMatrix> differentials);

  bool empty() const { return terms_.empty(); }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(terms_.size()) - 1; }

  const PresentedAbelianGroup& term(int degree) const;
  // d^degree : C^degree -> C^{degree+1}, for lo <= degree < hi.
  const IntMatrix& differential(int degree) const;

 private:
  int lo_ = 0;
  std::vector<PresentedAbelianGroup> terms_;
  std::vector<IntMatrix> differentials_;
};

// ker(d^i) / im(d^{i-1}) computed in the quotient groups. Degrees outside
// [lo, hi] give the trivial group.
FgAbelianGroup cohomology(const BoundedComplex& complex, int degree);

// prod_i #C^i^{(-1)^i}. Throws std::domain_error if some term is infinite.
Rational euler_number(const BoundedComplex& complex);

// Same product taken over a list of groups placed at degrees lo, lo+1, ...
Rational euler_number(int lo, const std::vector<FgAbelianGroup>& groups);

}  // namespace eqlc
