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

#include "eqlc/mackey.hpp"

#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

#include "eqlc/numtheory.hpp"
#include "eqlc/smith.hpp"

namespace eqlc::equivariant {

namespace {

using IndexSet = std::vector<std::size_t>;

// All subsets of {0..n-1}, grouped by size, lexicographic within a size.
std::vector<std::vector<IndexSet>> subsets_by_size(std::size_t n) {
  std::vector<std::vector<IndexSet>> out(n + 1);
  std::vector<std::uint64_t> labels(n);
  std::iota(labels.begin(), labels.end(), 0);
  for (const auto& s : squarefree_subsets(labels)) {
    IndexSet idx(s.primes.begin(), s.primes.end());
    out[idx.size()].push_back(std::move(idx));
  }
  return out;
}

// Alternating-sum complex over subsets of an n-element index set. Subset S
// sits in degree -|S|; the component S -> S minus its j-th element (1-based)
// is (-1)^j * face(S, j).
BoundedComplex subset_complex(
    std::size_t n, const std::function<PresentedAbelianGroup(const IndexSet&)>& value,
    const std::function<IntMatrix(const IndexSet&, std::size_t)>& face) {
  const auto by_size = subsets_by_size(n);
  std::vector<std::vector<PresentedAbelianGroup>> groups(n + 1);
  std::vector<std::vector<std::size_t>> offsets(n + 1);
  std::vector<PresentedAbelianGroup> terms;  // indexed by degree -n .. 0
  for (std::size_t s = n + 1; s-- > 0;) {
    PresentedAbelianGroup total = PresentedAbelianGroup::zero();
    for (const auto& subset : by_size[s]) {
      offsets[s].push_back(total.generators());
      groups[s].push_back(value(subset));
      total = total.direct_sum(groups[s].back());
    }
    terms.push_back(std::move(total));
  }

  std::vector<IntMatrix> diffs;
  for (std::size_t s = n; s >= 1; --s) {
    const std::size_t src_dim = terms[n - s].generators();
    const std::size_t dst_dim = terms[n - s + 1].generators();
    IntMatrix d(dst_dim, src_dim);
    for (std::size_t a = 0; a < by_size[s].size(); ++a) {
      const IndexSet& S = by_size[s][a];
      for (std::size_t j = 0; j < S.size(); ++j) {
        IndexSet T = S;
        T.erase(T.begin() + static_cast<std::ptrdiff_t>(j));
        std::size_t b = 0;
        while (by_size[s - 1][b] != T) ++b;
        const IntMatrix block = face(S, j);
        const bool negative = (j + 1) % 2 == 1;
        for (std::size_t r = 0; r < block.rows(); ++r)
          for (std::size_t c = 0; c < block.cols(); ++c) {
            const Integer& x = block(r, c);
            d(offsets[s - 1][b] + r, offsets[s][a] + c) = negative ? Integer(-x) : x;
          }
      }
    }
    diffs.push_back(std::move(d));
  }
  return BoundedComplex(-static_cast<int>(n), std::move(terms), std::move(diffs));
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument("CyclicMackeyData: " + what);
}

}  // namespace

CyclicMackeyData::CyclicMackeyData(std::uint64_t m,
                                   std::map<std::uint64_t, PresentedAbelianGroup> values,
                                   ExtMap ext)
    : m_(m), divisors_(eqlc::divisors(m)), values_(std::move(values)), ext_(std::move(ext)) {
  require(m >= 1, "group order must be positive");
  for (std::uint64_t d : divisors_) require(values_.count(d) == 1, "missing value at " + std::to_string(d));
  require(values_.size() == divisors_.size(), "value given at a non-divisor");
  for (const auto& [key, mat] : ext_) {
    const auto [dp, d] = key;
    require(m % dp == 0 && dp % d == 0, "ext(" + std::to_string(dp) + ", " + std::to_string(d) + ") is not a divisor pair");
    require(mat.rows() == values_.at(d).generators() && mat.cols() == values_.at(dp).generators(),
            "ext(" + std::to_string(dp) + ", " + std::to_string(d) + ") has the wrong shape");
  }

  // Fill in identities and composites along d' -> d'/p -> ... -> d, always
  // removing the smallest remaining prime first. Divisors ascend, so shorter
  // gaps are filled before longer ones.
  for (std::uint64_t d : divisors_) {
    ext_.try_emplace({d, d}, IntMatrix::identity(values_.at(d).generators()));
    for (std::uint64_t dp : divisors_) {
      if (dp <= d || dp % d != 0 || ext_.count({dp, d}) != 0) continue;
      const std::uint64_t p = factorize(dp / d).primes().front();
      require(dp / d != p, "missing prime-step ext(" + std::to_string(dp) + ", " + std::to_string(d) + ")");
      ext_.emplace(std::make_pair(dp, d), ext_.at({dp / p, d}) * ext_.at({dp, dp / p}));
    }
  }

  std::map<std::uint64_t, ColumnLattice> lattices;
  for (std::uint64_t d : divisors_) lattices.emplace(d, ColumnLattice(values_.at(d).relations()));
  for (const auto& [key, mat] : ext_) {
    const auto [dp, d] = key;
    require(lattices.at(d).contains_columns(mat * values_.at(dp).relations()),
            "ext(" + std::to_string(dp) + ", " + std::to_string(d) + ") is not well defined");
  }
  for (const auto& [key, outer] : ext_) {
    const auto [dpp, d] = key;
    for (std::uint64_t dp : divisors_) {
      if (dp == d || dp == dpp || dpp % dp != 0 || dp % d != 0) continue;
      const IntMatrix diff = outer + -(ext_.at({dp, d}) * ext_.at({dpp, dp}));
      require(lattices.at(d).contains_columns(diff),
              "restrictions are not functorial through " + std::to_string(dp));
    }
  }
}

const PresentedAbelianGroup& CyclicMackeyData::value(std::uint64_t d) const {
  auto it = values_.find(d);
  if (it == values_.end()) throw std::out_of_range("CyclicMackeyData::value: " + std::to_string(d) + " does not divide m");
  return it->second;
}

const IntMatrix& CyclicMackeyData::ext(std::uint64_t d_prime, std::uint64_t d) const {
  auto it = ext_.find({d_prime, d});
  if (it == ext_.end())
    throw std::out_of_range("CyclicMackeyData::ext: no map " + std::to_string(d_prime) + " -> " + std::to_string(d));
  return it->second;
}

BoundedComplex moore_cochain_complex(const CyclicMackeyData& data) {
  const std::vector<std::uint64_t> primes = factorize(data.m()).primes();
  auto product = [&](const IndexSet& s) {
    std::uint64_t out = 1;
    for (std::size_t i : s) out *= primes[i];
    return out;
  };
  return subset_complex(
      primes.size(), [&](const IndexSet& s) { return data.value(product(s)); },
      [&](const IndexSet& s, std::size_t j) {
        const std::uint64_t d = product(s);
        return data.ext(d, d / primes[s[j]]);
      });
}

FgAbelianGroup bredon_cohomology(const CyclicMackeyData& data, int s) {
  const int lambda = static_cast<int>(factorize(data.m()).num_distinct_primes());
  if (s < -lambda || s > 0)
    throw std::out_of_range("bredon_cohomology: degree " + std::to_string(s) + " outside [" +
                            std::to_string(-lambda) + ", 0]");
  return cohomology(moore_cochain_complex(data), s);
}

FgAbelianGroup h0_fixed_point_oracle(const CyclicMackeyData& data) {
  IntMatrix gens = data.value(1).relations();
  for (std::uint64_t p : factorize(data.m()).primes()) gens = IntMatrix::hconcat(gens, data.ext(p, 1));
  return cokernel(gens);
}

CyclicMackeyData cyclic_fixed_point_mackey(std::uint64_t mod, std::uint64_t u, std::uint64_t m) {
  if (mod == 0 || m == 0) throw std::invalid_argument("cyclic_fixed_point_mackey: modulus and m must be positive");
  if (std::gcd(u % mod, mod) != 1 && mod != 1)
    throw std::invalid_argument("cyclic_fixed_point_mackey: u is not a unit modulo " + std::to_string(mod));
  if (pow_mod(u, m, mod) != 1 % mod)
    throw std::invalid_argument("cyclic_fixed_point_mackey: u^m is not 1 modulo " + std::to_string(mod));

  // value(d) = ker(u^{m/d} - 1) = <mod/g_d> of order g_d.
  std::map<std::uint64_t, std::uint64_t> order;
  std::map<std::uint64_t, PresentedAbelianGroup> values;
  for (std::uint64_t d : eqlc::divisors(m)) {
    const std::uint64_t x = pow_mod(u, m / d, mod);
    order[d] = std::gcd(mod, (x + mod - 1) % mod);
    values.emplace(d, PresentedAbelianGroup::cyclic(Integer(static_cast<unsigned long>(order[d]))));
  }
  CyclicMackeyData::ExtMap ext;
  for (std::uint64_t d : eqlc::divisors(m))
    for (std::uint64_t p : factorize(m / d).primes()) {
      const std::uint64_t multiplier = order[d] / order[d * p];
      ext.emplace(std::make_pair(d * p, d), IntMatrix{{static_cast<long>(multiplier)}});
    }
  return CyclicMackeyData(m, std::move(values), std::move(ext));
}

CyclicMackeyData restrict_to_quotient(const CyclicMackeyData& data, std::uint64_t g) {
  if (g == 0 || data.m() % g != 0)
    throw std::invalid_argument("restrict_to_quotient: " + std::to_string(g) + " does not divide m");
  const std::uint64_t m = data.m() / g;
  std::map<std::uint64_t, PresentedAbelianGroup> values;
  CyclicMackeyData::ExtMap ext;
  for (std::uint64_t e : eqlc::divisors(m)) {
    values.emplace(e, data.value(e * g));
    for (std::uint64_t p : factorize(m / e).primes())
      ext.emplace(std::make_pair(e * p, e), data.ext(e * p * g, e * g));
  }
  return CyclicMackeyData(m, std::move(values), std::move(ext));
}

BoundedComplex cech_intersection_complex(std::uint64_t modulus,
                                         const std::vector<std::uint64_t>& generators) {
  if (modulus == 0) throw std::invalid_argument("cech_intersection_complex: modulus must be positive");
  for (std::uint64_t g : generators)
    if (g == 0 || modulus % g != 0)
      throw std::invalid_argument("cech_intersection_complex: generator " + std::to_string(g) +
                                  " does not divide " + std::to_string(modulus));
  // <g> meets <h> in <lcm(g, h)>; the empty intersection is the whole group.
  auto gen_of = [&](const IndexSet& s) {
    std::uint64_t g = 1;
    for (std::size_t i : s) g = std::lcm(g, generators[i]);
    return g;
  };
  return subset_complex(
      generators.size(),
      [&](const IndexSet& s) {
        return PresentedAbelianGroup::cyclic(Integer(static_cast<unsigned long>(modulus / gen_of(s))));
      },
      [&](const IndexSet& s, std::size_t j) {
        IndexSet t = s;
        t.erase(t.begin() + static_cast<std::ptrdiff_t>(j));
        return IntMatrix{{static_cast<long>(gen_of(s) / gen_of(t))}};
      });
}

}  // namespace eqlc::equivariant
