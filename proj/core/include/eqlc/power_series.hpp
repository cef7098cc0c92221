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
#include <vector>

#include "eqlc/cyclotomic.hpp"

namespace eqlc::curves {

// sum_{r=0}^{B} c_r t^r with coefficients in Q(zeta_level); arithmetic is
// modulo t^{B+1}.
class TruncatedLSeries {
 public:
  TruncatedLSeries(std::uint64_t level, std::size_t order);
  TruncatedLSeries(std::uint64_t level, std::vector<CyclotomicNumber> coeffs);

  static TruncatedLSeries one(std::uint64_t level, std::size_t order);
  // exp(sum_{r>=1} S_r t^r / r) for power sums S_1..S_B.
  static TruncatedLSeries from_power_sums(std::uint64_t level, const std::vector<CyclotomicNumber>& sums);
  static TruncatedLSeries from_power_sums(const std::vector<Rational>& sums);

  std::uint64_t level() const { return level_; }
  std::size_t order() const { return coeffs_.size() - 1; }
  const std::vector<CyclotomicNumber>& coeffs() const { return coeffs_; }
  const CyclotomicNumber& operator[](std::size_t r) const { return coeffs_[r]; }

  // Power sums S_1..S_B of a series with constant term 1, so that
  // from_power_sums(power_sums()) round-trips.
  std::vector<CyclotomicNumber> power_sums() const;
  // Requires c_0 == 1.
  TruncatedLSeries log() const;
  // Requires c_0 == 0.
  TruncatedLSeries exp() const;
  // Requires c_0 != 0.
  TruncatedLSeries inverse() const;
  TruncatedLSeries pow(std::int64_t e) const;

  TruncatedLSeries galois_conjugate(std::int64_t j) const;
  TruncatedLSeries embed(std::uint64_t target_level) const;
  TruncatedLSeries truncate(std::size_t order) const;

  bool is_rational() const;
  bool is_integral() const;

  // Coefficients joined by "; ".
  std::string to_string() const;

  friend TruncatedLSeries operator*(const TruncatedLSeries& a, const TruncatedLSeries& b);
  friend TruncatedLSeries operator+(const TruncatedLSeries& a, const TruncatedLSeries& b);
  friend bool operator==(const TruncatedLSeries&, const TruncatedLSeries&) = default;

 private:
  std::uint64_t level_;
  std::vector<CyclotomicNumber> coeffs_;
};

}  // namespace eqlc::curves
