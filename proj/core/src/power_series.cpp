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

#include "eqlc/power_series.hpp"

#include <stdexcept>

namespace eqlc::curves {

TruncatedLSeries::TruncatedLSeries(std::uint64_t level, std::size_t order)
    : level_(level), coeffs_(order + 1, CyclotomicNumber(level)) {}

TruncatedLSeries::TruncatedLSeries(std::uint64_t level, std::vector<CyclotomicNumber> coeffs)
    : level_(level), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("TruncatedLSeries: need at least the constant term");
  for (const auto& c : coeffs_)
    if (c.level() != level_) throw std::invalid_argument("TruncatedLSeries: coefficient level mismatch");
}

TruncatedLSeries TruncatedLSeries::one(std::uint64_t level, std::size_t order) {
  TruncatedLSeries s(level, order);
  s.coeffs_[0] = CyclotomicNumber(level, Rational(1));
  return s;
}

TruncatedLSeries TruncatedLSeries::from_power_sums(std::uint64_t level, const std::vector<CyclotomicNumber>& sums) {
  TruncatedLSeries e = one(level, sums.size());
  for (std::size_t r = 1; r <= sums.size(); ++r) {
    CyclotomicNumber acc(level);
    for (std::size_t i = 1; i <= r; ++i) acc += sums[i - 1] * e.coeffs_[r - i];
    e.coeffs_[r] = Rational(1, static_cast<unsigned long>(r)) * acc;
  }
  return e;
}

TruncatedLSeries TruncatedLSeries::from_power_sums(const std::vector<Rational>& sums) {
  std::vector<CyclotomicNumber> s;
  s.reserve(sums.size());
  for (const auto& x : sums) s.emplace_back(1, x);
  return from_power_sums(1, s);
}

std::vector<CyclotomicNumber> TruncatedLSeries::power_sums() const {
  if (coeffs_[0] != CyclotomicNumber(level_, Rational(1)))
    throw std::domain_error("power_sums: constant term must be 1");
  // Newton: r c_r = sum_{i=1}^{r} S_i c_{r-i}.
  std::vector<CyclotomicNumber> sums;
  for (std::size_t r = 1; r <= order(); ++r) {
    CyclotomicNumber s = Rational(static_cast<unsigned long>(r)) * coeffs_[r];
    for (std::size_t i = 1; i < r; ++i) s -= sums[i - 1] * coeffs_[r - i];
    sums.push_back(std::move(s));
  }
  return sums;
}

TruncatedLSeries TruncatedLSeries::log() const {
  const auto sums = power_sums();
  TruncatedLSeries out(level_, order());
  for (std::size_t r = 1; r <= order(); ++r) out.coeffs_[r] = Rational(1, static_cast<unsigned long>(r)) * sums[r - 1];
  return out;
}

TruncatedLSeries TruncatedLSeries::exp() const {
  if (!coeffs_[0].is_zero()) throw std::domain_error("exp: constant term must vanish");
  std::vector<CyclotomicNumber> sums;
  for (std::size_t r = 1; r <= order(); ++r) sums.push_back(Rational(static_cast<unsigned long>(r)) * coeffs_[r]);
  return from_power_sums(level_, sums);
}

TruncatedLSeries TruncatedLSeries::inverse() const {
  if (coeffs_[0].is_zero()) throw std::domain_error("inverse: constant term is zero");
  TruncatedLSeries out(level_, order());
  const CyclotomicNumber inv0 = coeffs_[0].inverse();
  out.coeffs_[0] = inv0;
  for (std::size_t r = 1; r <= order(); ++r) {
    CyclotomicNumber acc(level_);
    for (std::size_t i = 1; i <= r; ++i) acc += coeffs_[i] * out.coeffs_[r - i];
    out.coeffs_[r] = -(acc * inv0);
  }
  return out;
}

TruncatedLSeries TruncatedLSeries::pow(std::int64_t e) const {
  TruncatedLSeries base = e < 0 ? inverse() : *this;
  TruncatedLSeries out = one(level_, order());
  for (std::uint64_t n = static_cast<std::uint64_t>(e < 0 ? -e : e); n > 0; n >>= 1) {
    if (n & 1) out = out * base;
    if (n > 1) base = base * base;
  }
  return out;
}

TruncatedLSeries TruncatedLSeries::galois_conjugate(std::int64_t j) const {
  TruncatedLSeries out = *this;
  for (auto& c : out.coeffs_) c = c.galois_conjugate(j);
  return out;
}

TruncatedLSeries TruncatedLSeries::embed(std::uint64_t target_level) const {
  std::vector<CyclotomicNumber> c;
  for (const auto& x : coeffs_) c.push_back(x.embed(target_level));
  return TruncatedLSeries(target_level, std::move(c));
}

TruncatedLSeries TruncatedLSeries::truncate(std::size_t new_order) const {
  if (new_order > order()) throw std::invalid_argument("truncate: order exceeds the series");
  return TruncatedLSeries(level_, std::vector<CyclotomicNumber>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(new_order + 1)));
}

bool TruncatedLSeries::is_rational() const {
  for (const auto& c : coeffs_)
    if (!c.is_rational()) return false;
  return true;
}

bool TruncatedLSeries::is_integral() const {
  for (const auto& c : coeffs_)
    if (!c.is_integral()) return false;
  return true;
}

std::string TruncatedLSeries::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out += (i ? "; " : "") + coeffs_[i].to_string();
  return out;
}

TruncatedLSeries operator*(const TruncatedLSeries& a, const TruncatedLSeries& b) {
  if (a.level_ != b.level_ || a.order() != b.order())
    throw std::invalid_argument("TruncatedLSeries: level or order mismatch");
  TruncatedLSeries out(a.level_, a.order());
  for (std::size_t i = 0; i <= a.order(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= a.order(); ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return out;
}

TruncatedLSeries operator+(const TruncatedLSeries& a, const TruncatedLSeries& b) {
  if (a.level_ != b.level_ || a.order() != b.order())
    throw std::invalid_argument("TruncatedLSeries: level or order mismatch");
  TruncatedLSeries out = a;
  for (std::size_t i = 0; i <= a.order(); ++i) out.coeffs_[i] += b.coeffs_[i];
  return out;
}

}  // namespace eqlc::curves
