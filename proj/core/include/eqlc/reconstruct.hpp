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
#include <string>
#include <variant>
#include <vector>

#include "eqlc/cyclotomic.hpp"
#include "eqlc/power_series.hpp"

namespace eqlc::curves {

// num/den in t with coefficients in Q(zeta_level) and den(0) = 1.
struct RationalFunction {
  std::uint64_t level = 1;
  std::vector<CyclotomicNumber> num;
  std::vector<CyclotomicNumber> den;

  std::string to_string() const;
};

struct InsufficientOrder {
  std::size_t recurrence_length = 0;  // shortest recurrence seen in the data
  std::size_t max_deg = 0;
};

using Reconstruction = std::variant<RationalFunction, InsufficientOrder>;

// Berlekamp-Massey over Q(zeta_level). Requires order() >= 2 * max_deg + 2;
// succeeds when numerator and denominator both have degree <= max_deg.
Reconstruction rational_reconstruction(const TruncatedLSeries& series, std::size_t max_deg);

// Value at s = -n, i.e. t = p^n. Throws std::domain_error at a pole.
CyclotomicNumber l_special_value_curve(const RationalFunction& f, std::uint64_t p, std::uint64_t n);

}  // namespace eqlc::curves
