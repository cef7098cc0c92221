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

#include "eqlc/reconstruct.hpp"

#include <stdexcept>

namespace eqlc::curves {

namespace {

using Poly = std::vector<CyclotomicNumber>;

void trim(Poly& a) {
  while (a.size() > 1 && a.back().is_zero()) a.pop_back();
}

std::string poly_string(const Poly& a) {
  std::string out = "(";
  for (std::size_t i = 0; i < a.size(); ++i) out += (i ? ", " : "") + a[i].to_string();
  return out + ")";
}

CyclotomicNumber evaluate(const Poly& a, const Rational& t, std::uint64_t level) {
  CyclotomicNumber acc(level);
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = t * acc + *it;
  return acc;
}

}  // namespace

std::string RationalFunction::to_string() const { return poly_string(num) + "/" + poly_string(den); }

Reconstruction rational_reconstruction(const TruncatedLSeries& series, std::size_t max_deg) {
  const std::size_t n_terms = series.order() + 1;
  if (series.order() < 2 * max_deg + 2)
    throw std::invalid_argument("rational_reconstruction: series order " + std::to_string(series.order()) +
                                " below 2*max_deg+2");
  const std::uint64_t level = series.level();
  const CyclotomicNumber zero(level);
  const CyclotomicNumber one(level, Rational(1));

  Poly c{one}, b{one};
  std::size_t length = 0;
  std::size_t shift = 1;
  CyclotomicNumber last = one;
  for (std::size_t n = 0; n < n_terms; ++n) {
    CyclotomicNumber disc = series[n];
    for (std::size_t i = 1; i <= n && i < c.size(); ++i) disc += c[i] * series[n - i];
    if (disc.is_zero()) {
      ++shift;
      continue;
    }
    const CyclotomicNumber factor = disc / last;
    Poly next = c;
    if (next.size() < b.size() + shift) next.resize(b.size() + shift, zero);
    for (std::size_t i = 0; i < b.size(); ++i) next[i + shift] -= factor * b[i];
    if (2 * length <= n) {
      b = c;
      length = n + 1 - length;
      last = disc;
      shift = 1;
    } else {
      ++shift;
    }
    c = std::move(next);
  }
  trim(c);

  // Numerator: (den * series) mod t^length.
  Poly num(std::max<std::size_t>(length, 1), zero);
  for (std::size_t k = 0; k < length; ++k)
    for (std::size_t i = 0; i <= k && i < c.size(); ++i) num[k] += c[i] * series[k - i];
  trim(num);

  if (length > max_deg + 1 || c.size() > max_deg + 1 || num.size() > max_deg + 1)
    return InsufficientOrder{length, max_deg};

  // The recurrence must reproduce every available coefficient.
  for (std::size_t k = 0; k < n_terms; ++k) {
    CyclotomicNumber lhs(level);
    for (std::size_t i = 0; i <= k && i < c.size(); ++i) lhs += c[i] * series[k - i];
    const CyclotomicNumber rhs = k < num.size() ? num[k] : zero;
    if (lhs != rhs) return InsufficientOrder{length, max_deg};
  }
  return RationalFunction{level, std::move(num), std::move(c)};
}

CyclotomicNumber l_special_value_curve(const RationalFunction& f, std::uint64_t p, std::uint64_t n) {
  const Rational t(ipow(Integer(static_cast<unsigned long>(p)), n));
  const CyclotomicNumber den = evaluate(f.den, t, f.level);
  if (den.is_zero()) throw std::domain_error("l_special_value_curve: pole at t = " + t.get_str());
  return evaluate(f.num, t, f.level) / den;
}

}  // namespace eqlc::curves
