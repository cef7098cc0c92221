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

#include "eqlc/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "eqlc/numtheory.hpp"

namespace eqlc {

namespace {

std::vector<Integer> compute_cyclotomic(std::uint64_t m) {
  // x^m - 1 divided exactly by Phi_d for each proper divisor d.
  std::vector<Integer> num(m + 1);
  num[0] = -1;
  num[m] = 1;
  for (std::uint64_t d : divisors(m)) {
    if (d == m) continue;
    const auto& den = cyclotomic_coefficients(d);
    const std::size_t dn = den.size() - 1;
    std::vector<Integer> q(num.size() - dn);
    for (std::size_t k = q.size(); k-- > 0;) {
      q[k] = num[k + dn];  // den is monic
      if (q[k] == 0) continue;
      for (std::size_t j = 0; j <= dn; ++j) num[k + j] -= q[k] * den[j];
    }
    num = std::move(q);
  }
  return num;
}

// Reduces v in place modulo the monic Phi and truncates to phi entries.
void reduce_mod_phi(std::vector<Rational>& v, const std::vector<Integer>& phi) {
  const std::size_t n = phi.size() - 1;
  for (std::size_t i = v.size(); i-- > n;) {
    if (v[i] == 0) continue;
    const Rational c = v[i];
    for (std::size_t k = 0; k <= n; ++k) v[i - n + k] -= c * phi[k];
  }
  v.resize(n);
}

}  // namespace

const std::vector<Integer>& cyclotomic_coefficients(std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("cyclotomic polynomial: level must be positive");
  static std::mutex mutex;
  static std::map<std::uint64_t, std::vector<Integer>> cache;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
  }
  std::vector<Integer> coeffs = m == 1 ? std::vector<Integer>{-1, 1} : compute_cyclotomic(m);
  std::lock_guard<std::mutex> lock(mutex);
  // std::map never invalidates references on insertion.
  return cache.emplace(m, std::move(coeffs)).first->second;
}

QPoly cyclotomic_polynomial(std::uint64_t m) {
  const auto& c = cyclotomic_coefficients(m);
  return QPoly(std::vector<Rational>(c.begin(), c.end()));
}

CyclotomicNumber::CyclotomicNumber(std::uint64_t level) : level_(level) {
  if (level == 0) throw std::invalid_argument("CyclotomicNumber: level must be positive");
  coeffs_.assign(euler_phi(level), Rational(0));
}

CyclotomicNumber::CyclotomicNumber(std::uint64_t level, const Rational& value)
    : CyclotomicNumber(level) {
  coeffs_[0] = value;
}

CyclotomicNumber::CyclotomicNumber(std::uint64_t level, std::vector<Rational> coeffs)
    : level_(level) {
  if (level == 0) throw std::invalid_argument("CyclotomicNumber: level must be positive");
  const auto& phi = cyclotomic_coefficients(level);
  if (coeffs.size() < phi.size() - 1) coeffs.resize(phi.size() - 1);
  reduce_mod_phi(coeffs, phi);
  coeffs_ = std::move(coeffs);
}

CyclotomicNumber CyclotomicNumber::zeta_power(std::uint64_t level, std::int64_t k) {
  const auto m = static_cast<std::int64_t>(level);
  const auto e = static_cast<std::size_t>(((k % m) + m) % m);
  std::vector<Rational> v(e + 1);
  v[e] = 1;
  return CyclotomicNumber(level, std::move(v));
}

void CyclotomicNumber::check_level(const CyclotomicNumber& o) const {
  if (o.level_ != level_)
    throw std::invalid_argument("CyclotomicNumber: level mismatch " + std::to_string(level_) +
                                " vs " + std::to_string(o.level_));
}

bool CyclotomicNumber::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool CyclotomicNumber::is_integral() const {
  for (const auto& c : coeffs_)
    if (c.get_den() != 1) return false;
  return true;
}

bool CyclotomicNumber::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

Rational CyclotomicNumber::rational_value() const {
  if (!is_rational()) throw std::domain_error("CyclotomicNumber is not rational: " + to_string());
  return coeffs_[0];
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& o) {
  check_level(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& o) {
  check_level(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& o) {
  check_level(o);
  const std::size_t n = coeffs_.size();
  std::vector<Rational> prod(2 * n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (o.coeffs_[j] != 0) prod[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  reduce_mod_phi(prod, cyclotomic_coefficients(level_));
  coeffs_ = std::move(prod);
  return *this;
}

CyclotomicNumber operator*(const Rational& c, CyclotomicNumber a) {
  for (auto& x : a.coeffs_) x *= c;
  return a;
}

CyclotomicNumber operator-(CyclotomicNumber a) {
  for (auto& x : a.coeffs_) x = -x;
  return a;
}

CyclotomicNumber CyclotomicNumber::inverse() const {
  if (is_zero()) throw std::domain_error("CyclotomicNumber::inverse: division by zero");
  if (is_rational()) return CyclotomicNumber(level_, Rational(1) / coeffs_[0]);
  // Extended Euclid on (Phi, z) tracking only the cofactor of z.
  QPoly r0 = cyclotomic_polynomial(level_);
  QPoly r1(coeffs_);
  QPoly t0;
  QPoly t1 = QPoly::constant(1);
  while (r1.degree() > 0) {
    QPoly q, r;
    QPoly::divmod(r0, r1, q, r);
    QPoly t = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    t0 = std::move(t1);
    t1 = std::move(t);
  }
  // Phi is irreducible, so the final remainder is a nonzero constant c with
  // t1 * z = c modulo Phi.
  const Rational c = r1.leading();
  return CyclotomicNumber(level_, (Rational(1) / c * t1).coeffs());
}

CyclotomicNumber CyclotomicNumber::galois_conjugate(std::int64_t j) const {
  const auto m = static_cast<std::int64_t>(level_);
  const std::int64_t jm = ((j % m) + m) % m;
  if (std::gcd(jm, m) != 1)
    throw std::invalid_argument("galois_conjugate: exponent " + std::to_string(j) +
                                " not coprime to level " + std::to_string(level_));
  std::vector<Rational> v(level_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    v[(i * static_cast<std::size_t>(jm)) % level_] += coeffs_[i];
  return CyclotomicNumber(level_, std::move(v));
}

Rational CyclotomicNumber::norm_to_Q() const {
  CyclotomicNumber acc(level_, Rational(1));
  for (std::uint64_t j = 1; j <= level_; ++j)
    if (std::gcd(j, level_) == 1) acc *= galois_conjugate(static_cast<std::int64_t>(j));
  return acc.rational_value();
}

CyclotomicNumber CyclotomicNumber::embed(std::uint64_t target_level) const {
  if (target_level == 0 || target_level % level_ != 0)
    throw std::invalid_argument("embed: level " + std::to_string(level_) + " does not divide " +
                                std::to_string(target_level));
  const std::uint64_t step = target_level / level_;
  std::vector<Rational> v(target_level);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[(i * step) % target_level] += coeffs_[i];
  return CyclotomicNumber(target_level, std::move(v));
}

IntMatrix CyclotomicNumber::multiplication_matrix() const {
  if (!is_integral()) throw std::domain_error("multiplication_matrix: element is not integral");
  const std::size_t n = coeffs_.size();
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const CyclotomicNumber col = *this * zeta_power(level_, static_cast<std::int64_t>(i));
    for (std::size_t r = 0; r < n; ++r) out(r, i) = col.coeffs_[r].get_num();
  }
  return out;
}

std::string CyclotomicNumber::to_string() const {
  auto fmt = [](const Rational& q) { return q.get_num().get_str() + "/" + q.get_den().get_str(); };
  if (is_rational()) return fmt(coeffs_[0]);
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < coeffs_.size(); ++i) os << (i ? ", " : "") << fmt(coeffs_[i]);
  os << "]@" << level_;
  return os.str();
}

FgAbelianGroup quotient_by_principal(std::uint64_t m, const CyclotomicNumber& z) {
  if (z.level() != m) throw std::invalid_argument("quotient_by_principal: level mismatch");
  if (z.is_zero()) throw std::domain_error("quotient_by_principal: zero element has infinite quotient");
  return cokernel(z.multiplication_matrix());
}

}  // namespace eqlc
