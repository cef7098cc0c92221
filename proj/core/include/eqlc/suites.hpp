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

// Batch drivers over parameter matrices. Each driver expands its matrix into
// an ordered list of cases, evaluates them on up to `jobs` threads and merges
// the per-case reports back in list order, so output never depends on jobs.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eqlc/numtheory.hpp"
#include "eqlc/prime_field.hpp"
#include "eqlc/report.hpp"

namespace eqlc::suites {

struct FfqlcMatrix {
  std::vector<Integer> q;
  std::uint64_t m_max = 12;
  std::uint64_t k_max = 6;
  bool induced_sample = true;
};

// Throws std::invalid_argument on a non-prime-power q or zero bounds.
VerificationReport run_ffqlc(const FfqlcMatrix& matrix, unsigned jobs = 1);

struct CoverSpec {
  std::uint64_t p = 3;
  std::uint64_t d = 1;
  curves::FpPoly f{1};
};

// Accepts one {"p", "d", "f"} object or an array of them. Coefficients are
// little-endian and may be negative; they are reduced mod p.
std::vector<CoverSpec> parse_cover_specs(const std::string& json_text);

std::size_t default_curve_order(const CoverSpec& spec);

// order == 0 selects default_curve_order per cover. Covers sharing (p, f)
// share one census, which is cross-checked between the two counting engines.
VerificationReport run_curves(const std::vector<CoverSpec>& covers, std::size_t order = 0, unsigned jobs = 1);

// The covers named in the curve identity criterion.
std::vector<CoverSpec> factorization_matrix();

struct DirichletMatrix {
  std::uint64_t N_max = 40;
  std::uint64_t n_max = 3;
  std::uint64_t k_min = 2;
  std::uint64_t k_max = 7;
  bool predictions = true;
};

VerificationReport run_dirichlet(const DirichletMatrix& matrix, unsigned jobs = 1);

}  // namespace eqlc::suites
