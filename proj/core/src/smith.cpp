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

#include "eqlc/smith.hpp"

#include <algorithm>
#include <stdexcept>

namespace eqlc {

std::vector<Integer> SmithForm::invariants() const {
  std::vector<Integer> out;
  out.reserve(rank);
  for (std::size_t i = 0; i < rank; ++i) out.push_back(D(i, i));
  return out;
}

namespace {

struct Reducer {
  IntMatrix& a;
  IntMatrix* u;
  IntMatrix* v;

  void swap_rows(std::size_t i, std::size_t j) {
    a.swap_rows(i, j);
    if (u) u->swap_rows(i, j);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    a.swap_cols(i, j);
    if (v) v->swap_cols(i, j);
  }
  void add_row(std::size_t dst, std::size_t src, const Integer& f) {
    a.add_row_multiple(dst, src, f);
    if (u) u->add_row_multiple(dst, src, f);
  }
  void add_col(std::size_t dst, std::size_t src, const Integer& f) {
    a.add_col_multiple(dst, src, f);
    if (v) v->add_col_multiple(dst, src, f);
  }
  void negate_row(std::size_t i) {
    a.negate_row(i);
    if (u) u->negate_row(i);
  }

  // Moves the least-|.| nonzero entry of the trailing block to (t, t).
  bool place_pivot(std::size_t t) {
    std::size_t bi = 0, bj = 0;
    bool found = false;
    for (std::size_t i = t; i < a.rows(); ++i)
      for (std::size_t j = t; j < a.cols(); ++j) {
        const Integer& x = a(i, j);
        if (x == 0) continue;
        if (!found || mpz_cmpabs(x.get_mpz_t(), a(bi, bj).get_mpz_t()) < 0) {
          bi = i;
          bj = j;
          found = true;
          if (x == 1 || x == -1) goto done;
        }
      }
  done:
    if (!found) return false;
    swap_rows(t, bi);
    swap_cols(t, bj);
    return true;
  }

  void run() {
    const std::size_t n = std::min(a.rows(), a.cols());
    Integer q;
    for (std::size_t t = 0; t < n; ++t) {
      if (!place_pivot(t)) return;
      while (true) {
        bool clean = true;
        for (std::size_t i = t + 1; i < a.rows(); ++i) {
          if (a(i, t) == 0) continue;
          mpz_tdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
          add_row(i, t, -q);
          if (a(i, t) != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < a.cols(); ++j) {
          if (a(t, j) == 0) continue;
          mpz_tdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
          add_col(j, t, -q);
          if (a(t, j) != 0) clean = false;
        }
        if (!clean) {
          place_pivot(t);
          continue;
        }
        // Row and column are clear; enforce divisibility of the trailing block.
        bool divisible = true;
        for (std::size_t i = t + 1; i < a.rows() && divisible; ++i)
          for (std::size_t j = t + 1; j < a.cols(); ++j) {
            if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
              add_row(t, i, 1);
              divisible = false;
              break;
            }
          }
        if (divisible) break;
      }
      if (a(t, t) < 0) negate_row(t);
    }
  }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m, bool track_u, bool track_v) {
  SmithForm out;
  out.D = m;
  if (track_u) out.U = IntMatrix::identity(m.rows());
  if (track_v) out.V = IntMatrix::identity(m.cols());
  Reducer r{out.D, track_u ? &out.U : nullptr, track_v ? &out.V : nullptr};
  r.run();
  const std::size_t n = std::min(m.rows(), m.cols());
  while (out.rank < n && out.D(out.rank, out.rank) != 0) ++out.rank;
  return out;
}

IntMatrix integer_kernel(const IntMatrix& m) {
  const SmithForm s = smith_normal_form(m, /*track_u=*/false, /*track_v=*/true);
  return s.V.column_block(s.rank, m.cols() - s.rank);
}

ColumnLattice::ColumnLattice(const IntMatrix& generators) {
  const SmithForm s = smith_normal_form(generators, /*track_u=*/true, /*track_v=*/false);
  U_ = s.U;
  invariants_ = s.invariants();
}

bool ColumnLattice::contains_columns(const IntMatrix& vectors) const {
  if (vectors.rows() != ambient_dim())
    throw std::invalid_argument("ColumnLattice: dimension mismatch");
  const IntMatrix image = U_ * vectors;
  for (std::size_t c = 0; c < image.cols(); ++c)
    for (std::size_t i = 0; i < image.rows(); ++i) {
      const Integer& y = image(i, c);
      if (i < rank()) {
        if (!mpz_divisible_p(y.get_mpz_t(), invariants_[i].get_mpz_t())) return false;
      } else if (y != 0) {
        return false;
      }
    }
  return true;
}

IntMatrix ColumnLattice::coordinates(const IntMatrix& vectors) const {
  if (vectors.rows() != ambient_dim())
    throw std::invalid_argument("ColumnLattice: dimension mismatch");
  const IntMatrix image = U_ * vectors;
  IntMatrix out(rank(), vectors.cols());
  for (std::size_t c = 0; c < image.cols(); ++c)
    for (std::size_t i = 0; i < image.rows(); ++i) {
      const Integer& y = image(i, c);
      if (i < rank()) {
        if (!mpz_divisible_p(y.get_mpz_t(), invariants_[i].get_mpz_t()))
          throw std::domain_error("ColumnLattice: vector outside lattice");
        mpz_divexact(out(i, c).get_mpz_t(), y.get_mpz_t(), invariants_[i].get_mpz_t());
      } else if (y != 0) {
        throw std::domain_error("ColumnLattice: vector outside lattice");
      }
    }
  return out;
}

}  // namespace eqlc
