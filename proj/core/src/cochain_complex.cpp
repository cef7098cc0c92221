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

#include "eqlc/cochain_complex.hpp"

#include <stdexcept>
#include <string>

#include "eqlc/smith.hpp"

namespace eqlc {

BoundedComplex::BoundedComplex(int lo, std::vector<PresentedAbelianGroup> terms,
                               std::vector<IntMatrix> differentials)
    : lo_(lo), terms_(std::move(terms)), differentials_(std::move(differentials)) {
  if (terms_.empty()) {
    if (!differentials_.empty()) throw std::invalid_argument("BoundedComplex: differentials without terms");
    return;
  }
  if (differentials_.size() + 1 != terms_.size())
    throw std::invalid_argument("BoundedComplex: need one differential between consecutive terms");
  for (std::size_t i = 0; i < differentials_.size(); ++i) {
    const IntMatrix& d = differentials_[i];
    const auto& src = terms_[i];
    const auto& dst = terms_[i + 1];
    const std::string where = " at degree " + std::to_string(lo_ + static_cast<int>(i));
    if (d.rows() != dst.generators() || d.cols() != src.generators())
      throw std::invalid_argument("BoundedComplex: differential shape mismatch" + where);
    const ColumnLattice target(dst.relations());
    if (!target.contains_columns(d * src.relations()))
      throw std::invalid_argument("BoundedComplex: differential not well defined" + where);
    if (i + 1 < differentials_.size()) {
      const ColumnLattice next(terms_[i + 2].relations());
      if (!next.contains_columns(differentials_[i + 1] * d))
        throw std::invalid_argument("BoundedComplex: d o d is not zero" + where);
    }
  }
}

const PresentedAbelianGroup& BoundedComplex::term(int degree) const {
  if (degree < lo_ || degree > hi()) throw std::out_of_range("BoundedComplex::term");
  return terms_[static_cast<std::size_t>(degree - lo_)];
}

const IntMatrix& BoundedComplex::differential(int degree) const {
  if (degree < lo_ || degree >= hi()) throw std::out_of_range("BoundedComplex::differential");
  return differentials_[static_cast<std::size_t>(degree - lo_)];
}

FgAbelianGroup cohomology(const BoundedComplex& complex, int degree) {
  if (complex.empty() || degree < complex.lo() || degree > complex.hi()) return {};
  const PresentedAbelianGroup& mid = complex.term(degree);
  const std::size_t n = mid.generators();
  if (n == 0) return {};

  // Cycles: x in Z^n with d x in the relation lattice of the next term,
  // i.e. the projection of ker [d | R_next] onto the first n coordinates.
  IntMatrix cycles;
  if (degree < complex.hi()) {
    const IntMatrix& d = complex.differential(degree);
    const IntMatrix kernel =
        integer_kernel(IntMatrix::hconcat(d, complex.term(degree + 1).relations()));
    cycles = kernel.row_block(0, n);
  } else {
    cycles = IntMatrix::identity(n);
  }
  const ColumnLattice cycle_lattice(cycles);

  // Boundaries together with the relations of the middle term.
  IntMatrix boundaries = mid.relations();
  if (degree > complex.lo())
    boundaries = IntMatrix::hconcat(complex.differential(degree - 1), boundaries);

  return cokernel(cycle_lattice.coordinates(boundaries));
}

Rational euler_number(const BoundedComplex& complex) {
  std::vector<FgAbelianGroup> groups;
  if (complex.empty()) return 1;
  for (int i = complex.lo(); i <= complex.hi(); ++i) groups.push_back(complex.term(i).normal_form());
  return euler_number(complex.lo(), groups);
}

Rational euler_number(int lo, const std::vector<FgAbelianGroup>& groups) {
  Rational out = 1;
  for (std::size_t k = 0; k < groups.size(); ++k) {
    const int degree = lo + static_cast<int>(k);
    const Integer order = groups[k].order();
    if (degree % 2 == 0)
      out *= order;
    else
      out /= order;
  }
  out.canonicalize();
  return out;
}

}  // namespace eqlc
