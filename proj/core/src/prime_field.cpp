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

#include "eqlc/prime_field.hpp"

#include <stdexcept>
#include <string>

#include "eqlc/numtheory.hpp"

namespace eqlc::curves {

FpPoly fp_normalize(FpPoly a, std::uint64_t p) {
  for (auto& c : a) c %= p;
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

FpPoly fp_sub(const FpPoly& a, const FpPoly& b, std::uint64_t p) {
  FpPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    const std::uint64_t x = i < a.size() ? a[i] : 0;
    const std::uint64_t y = i < b.size() ? b[i] : 0;
    out[i] = (x + p - y) % p;
  }
  return fp_normalize(std::move(out), p);
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  FpPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  return fp_normalize(std::move(out), p);
}

std::uint64_t fp_inverse(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw std::domain_error("fp_inverse: zero has no inverse");
  return pow_mod(a, p - 2, p);
}

FpPoly fp_mod(const FpPoly& a, const FpPoly& m, std::uint64_t p) {
  if (m.empty()) throw std::domain_error("fp_mod: zero modulus");
  FpPoly r = a;
  const std::uint64_t inv = fp_inverse(m.back(), p);
  const std::size_t dm = m.size() - 1;
  while (r.size() > dm) {
    const std::uint64_t c = r.back() * inv % p;
    const std::size_t shift = r.size() - 1 - dm;
    for (std::size_t j = 0; j <= dm; ++j) r[shift + j] = (r[shift + j] + p - c * m[j] % p) % p;
    r = fp_normalize(std::move(r), p);
  }
  return r;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, std::uint64_t p) {
  while (!b.empty()) {
    FpPoly r = fp_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

FpPoly fp_powmod(const FpPoly& base, std::uint64_t e, const FpPoly& m, std::uint64_t p) {
  FpPoly result = fp_mod({1}, m, p);
  FpPoly b = fp_mod(base, m, p);
  while (e > 0) {
    if (e & 1) result = fp_mod(fp_mul(result, b, p), m, p);
    b = fp_mod(fp_mul(b, b, p), m, p);
    e >>= 1;
  }
  return result;
}

std::uint64_t fp_eval(const FpPoly& f, std::uint64_t x, std::uint64_t p) {
  std::uint64_t acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = (acc * x + *it) % p;
  return acc;
}

bool fp_is_irreducible(const FpPoly& f, std::uint64_t p) {
  if (f.size() < 2) return false;
  const std::size_t n = f.size() - 1;
  const FpPoly x{0, 1};
  FpPoly power = x;  // x^{p^i} mod f
  for (std::size_t i = 1; i <= n / 2; ++i) {
    power = fp_powmod(power, p, f, p);
    if (fp_gcd(f, fp_sub(power, x, p), p).size() > 1) return false;
  }
  return true;
}

FpPoly first_irreducible(std::uint64_t p, unsigned degree) {
  if (degree == 0) throw std::invalid_argument("first_irreducible: degree must be positive");
  const std::uint64_t count = ipow(Integer(static_cast<unsigned long>(p)), degree).get_ui();
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    FpPoly f(degree + 1);
    f[degree] = 1;
    std::uint64_t v = idx;
    for (unsigned i = 0; i < degree; ++i, v /= p) f[i] = v % p;
    if (fp_is_irreducible(f, p)) return f;
  }
  throw std::logic_error("first_irreducible: none found");
}

std::uint64_t fp_norm_det(const FpPoly& h, const FpPoly& m, std::uint64_t p) {
  const std::size_t n = m.empty() ? 0 : m.size() - 1;
  // Column i is h * x^i mod m.
  std::vector<std::vector<std::uint64_t>> a(n, std::vector<std::uint64_t>(n, 0));
  FpPoly col = fp_mod(h, m, p);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t r = 0; r < col.size(); ++r) a[r][i] = col[r];
    col = fp_mod(fp_mul(col, {0, 1}, p), m, p);
  }
  std::uint64_t det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = (p - det) % p;
    }
    det = det * a[c][c] % p;
    const std::uint64_t inv = fp_inverse(a[c][c], p);
    for (std::size_t r = c + 1; r < n; ++r) {
      const std::uint64_t f = a[r][c] * inv % p;
      if (f == 0) continue;
      for (std::size_t k = c; k < n; ++k) a[r][k] = (a[r][k] + p - f * a[c][k] % p) % p;
    }
  }
  return det;
}

namespace {

FpPoly decode(std::uint64_t v, std::uint64_t p, unsigned r) {
  FpPoly out(r);
  for (unsigned i = 0; i < r; ++i, v /= p) out[i] = v % p;
  return fp_normalize(std::move(out), p);
}

std::uint64_t encode(const FpPoly& a, std::uint64_t p) {
  std::uint64_t v = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) v = v * p + *it;
  return v;
}

}  // namespace

FieldExt::FieldExt(std::uint64_t p, unsigned r) : p_(p), r_(r) {
  if (!is_prime(p)) throw std::invalid_argument("FieldExt: " + std::to_string(p) + " is not prime");
  if (r == 0) throw std::invalid_argument("FieldExt: degree must be positive");
  const Integer size = ipow(Integer(static_cast<unsigned long>(p)), r);
  if (size > kMaxSize)
    throw std::invalid_argument("FieldExt: F_" + std::to_string(p) + "^" + std::to_string(r) + " exceeds the table budget");
  q_ = size.get_ui();
  modulus_ = first_irreducible(p, r);

  const std::uint64_t order = q_ - 1;
  const auto primes = factorize(order).primes();
  std::uint64_t gamma = 0;
  for (std::uint64_t cand = 1; cand < q_ && gamma == 0; ++cand) {
    const FpPoly c = decode(cand, p, r);
    bool primitive = true;
    for (std::uint64_t l : primes)
      if (fp_powmod(c, order / l, modulus_, p) == FpPoly{1}) {
        primitive = false;
        break;
      }
    if (primitive) gamma = cand;
  }

  log_.assign(q_, 0);
  exp_.assign(order, 0);
  const FpPoly g = decode(gamma, p, r);
  FpPoly cur{1};
  for (std::uint64_t k = 0; k < order; ++k) {
    const std::uint64_t e = encode(cur, p);
    exp_[k] = static_cast<std::uint32_t>(e);
    log_[e] = static_cast<std::uint32_t>(k);
    cur = fp_mod(fp_mul(cur, g, p), modulus_, p);
  }

  // gamma^{(q-1)/(p-1)} is the norm of gamma and lies in F_p.
  const std::uint64_t norm_gamma = exp_[order / (p - 1)];
  const std::uint64_t root = smallest_primitive_root(p);
  std::uint64_t x = 1;
  for (std::uint64_t k = 0; k < p - 1; ++k, x = x * root % p)
    if (x == norm_gamma) kappa_ = k;
}

std::uint64_t FieldExt::mul(std::uint64_t a, std::uint64_t b) const {
  if (a == 0 || b == 0) return 0;
  const std::uint64_t k = (std::uint64_t{log_[a]} + log_[b]) % (q_ - 1);
  return exp_[k];
}

std::uint64_t FieldExt::add_constant(std::uint64_t a, std::uint64_t c) const {
  const std::uint64_t low = a % p_;
  return a - low + (low + c) % p_;
}

std::uint64_t FieldExt::eval(const FpPoly& f, std::uint64_t x) const {
  std::uint64_t acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = add_constant(mul(acc, x), *it);
  return acc;
}

std::uint64_t FieldExt::norm_class(std::uint64_t a) const {
  if (a == 0) throw std::domain_error("FieldExt::norm_class: zero element");
  return (std::uint64_t{log_[a]} % (p_ - 1)) * kappa_ % (p_ - 1);
}

}  // namespace eqlc::curves
