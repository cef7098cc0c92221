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

#include <string>
#include <vector>

#include "eqlc/numtheory.hpp"

namespace eqlc {

// Dense univariate polynomial over Q, little-endian, trimmed so that the
// leading coefficient is nonzero (the zero polynomial has no coefficients).
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rational> coeffs);
  static QPoly constant(const Rational& c);
  static QPoly monomial(const Rational& c, std::size_t degree);

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  const Rational& leading() const { return coeffs_.back(); }

  Rational evaluate(const Rational& x) const;
  bool is_integral() const;

  // Quotient and remainder; divisor must be nonzero.
  static void divmod(const QPoly& a, const QPoly& b, QPoly& quotient, QPoly& remainder);

  std::string to_string(const std::string& var = "x") const;

  friend QPoly operator+(const QPoly& a, const QPoly& b);
  friend QPoly operator-(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const Rational& c, const QPoly& a);
  friend bool operator==(const QPoly&, const QPoly&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

}  // namespace eqlc
