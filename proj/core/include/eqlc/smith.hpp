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
#include <vector>

#include "eqlc/int_matrix.hpp"

namespace eqlc {

// U * M * V == D with U, V unimodular and D diagonal, d_1 | d_2 | ... | d_rank,
// all d_i > 0, and zeros after position rank.
struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  std::size_t rank = 0;

  // The nonzero diagonal entries d_1, ..., d_rank.
  std::vector<Integer> invariants() const;
};

// Elementary row/column reduction pivoting on the entry of least absolute
// value. Set track_u / track_v to false to skip accumulating the transforms;
// the corresponding matrix is then left empty.
SmithForm smith_normal_form(const IntMatrix& m, bool track_u = true, bool track_v = true);

// Basis (as columns) of the integer kernel {x : M x = 0}.
IntMatrix integer_kernel(const IntMatrix& m);

// The subgroup of Z^n spanned by the columns of a generator matrix. Answers
// membership queries and expresses members in the lattice's own basis
// b_j = d_j * U^{-1} e_j (j < rank).
class ColumnLattice {
 public:
  explicit ColumnLattice(const IntMatrix& generators);

  std::size_t ambient_dim() const { return U_.rows(); }
  std::size_t rank() const { return invariants_.size(); }

  bool contains_columns(const IntMatrix& vectors) const;

  // rank x k matrix C with vectors = basis * C. Throws std::domain_error
  // when some column is not in the lattice.
  IntMatrix coordinates(const IntMatrix& vectors) const;

 private:
  IntMatrix U_;
  std::vector<Integer> invariants_;
};

}  // namespace eqlc
