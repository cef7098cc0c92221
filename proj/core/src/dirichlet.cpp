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

#include "eqlc/dirichlet.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

#include "eqlc/numtheory.hpp"

namespace eqlc::dirichlet {

namespace {

std::uint64_t crt_lift(std::uint64_t local, std::uint64_t pk, std::uint64_t N) {
  // x = local mod pk, x = 1 mod N/pk.
  const std::uint64_t rest = N / pk;
  if (rest == 1) return local % N;
  const std::uint64_t inv = pow_mod(rest % pk, euler_phi(pk) - 1, pk);
  const std::uint64_t t = ((local + pk - 1) % pk) * inv % pk;
  return (1 + rest * t) % N;
}

std::vector<std::uint64_t> normalize(std::uint64_t N, const std::vector<std::uint64_t>& H) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t h : H) out.push_back(h % N);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool contains(const std::vector<std::uint64_t>& sorted, std::uint64_t x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

std::vector<std::uint64_t> closure(std::uint64_t N, const std::vector<std::uint64_t>& gens) {
  std::set<std::uint64_t> seen{1 % N};
  std::vector<std::uint64_t> frontier{1 % N};
  while (!frontier.empty()) {
    std::vector<std::uint64_t> next;
    for (std::uint64_t x : frontier)
      for (std::uint64_t g : gens) {
        const std::uint64_t y = x * g % N;
        if (seen.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

std::string subgroup_label(const std::vector<std::uint64_t>& H) {
  std::string out = "{";
  for (std::size_t i = 0; i < H.size(); ++i) out += (i ? "," : "") + std::to_string(H[i]);
  return out + "}";
}

std::string field_label(const char* what, std::uint64_t N, const std::vector<std::uint64_t>& H) {
  return std::string(what) + " N=" + std::to_string(N) + " H=" + subgroup_label(H);
}

// First character whose kernel is exactly H, i.e. trivial on H of order m.
DirichletCharacter kernel_character(std::uint64_t N, const std::vector<std::uint64_t>& H, std::uint64_t m) {
  for (const auto& chi : DirichletCharacter::all(N))
    if (chi.order() == m && chi.is_trivial_on(H)) return chi;
  throw std::logic_error("no character with the requested kernel");
}

}  // namespace

std::vector<UnitGenerator> unit_group(std::uint64_t N) {
  if (N == 0) throw std::invalid_argument("unit_group: N must be positive");
  std::vector<UnitGenerator> gens;
  for (const auto& [p, e] : factorize(N).factors()) {
    const std::uint64_t pk = ipow(Integer(static_cast<unsigned long>(p)), e).get_ui();
    if (p == 2) {
      if (e >= 2) gens.push_back({crt_lift(pk - 1, pk, N), 2});
      if (e >= 3) gens.push_back({crt_lift(3, pk, N), pk / 8 * 2});
      continue;
    }
    std::uint64_t g = smallest_primitive_root(p);
    if (e >= 2 && pow_mod(g, p - 1, p * p) == 1) g += p;
    gens.push_back({crt_lift(g, pk, N), pk / p * (p - 1)});
  }
  return gens;
}

UnitGroup::UnitGroup(std::uint64_t N) : N_(N), gens_(unit_group(N)), logs_(N) {
  for (const auto& g : gens_) {
    order_ *= g.order;
    exponent_ = std::lcm(exponent_, g.order);
  }
  std::vector<std::uint64_t> k(gens_.size(), 0);
  for (std::uint64_t count = 0; count < order_; ++count) {
    std::uint64_t x = 1 % N_;
    for (std::size_t i = 0; i < gens_.size(); ++i) x = x * pow_mod(gens_[i].generator, k[i], N_) % N_;
    if (logs_[x]) throw std::logic_error("UnitGroup: generators are not independent");
    logs_[x] = k;
    for (std::size_t i = 0; i < k.size(); ++i) {
      if (++k[i] < gens_[i].order) break;
      k[i] = 0;
    }
  }
}

bool UnitGroup::is_unit(std::uint64_t a) const { return logs_[a % N_].has_value(); }

std::vector<std::uint64_t> UnitGroup::elements() const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t a = 0; a < N_; ++a)
    if (logs_[a]) out.push_back(a);
  return out;
}

DirichletCharacter::DirichletCharacter(std::shared_ptr<const UnitGroup> group, std::vector<std::uint64_t> exponents)
    : group_(std::move(group)), exponents_(std::move(exponents)) {
  const auto& gens = group_->generators();
  if (exponents_.size() != gens.size())
    throw std::invalid_argument("DirichletCharacter: need one exponent per generator");
  for (std::size_t i = 0; i < gens.size(); ++i) {
    exponents_[i] %= gens[i].order;
    order_ = std::lcm(order_, gens[i].order / std::gcd(exponents_[i], gens[i].order));
  }
}

std::vector<DirichletCharacter> DirichletCharacter::all(std::uint64_t N) {
  auto group = std::make_shared<const UnitGroup>(N);
  const auto& gens = group->generators();
  std::vector<DirichletCharacter> out;
  std::vector<std::uint64_t> e(gens.size(), 0);
  for (std::uint64_t count = 0; count < group->order(); ++count) {
    out.emplace_back(group, e);
    for (std::size_t i = e.size(); i-- > 0;) {
      if (++e[i] < gens[i].order) break;
      e[i] = 0;
    }
  }
  return out;
}

std::optional<std::uint64_t> DirichletCharacter::exponent_at(std::uint64_t a) const {
  const auto& lg = group_->log(a);
  if (!lg) return std::nullopt;
  const std::uint64_t E = group_->exponent();
  const auto& gens = group_->generators();
  std::uint64_t x = 0;
  for (std::size_t i = 0; i < gens.size(); ++i) x = (x + exponents_[i] * (*lg)[i] % gens[i].order * (E / gens[i].order)) % E;
  return x;
}

CyclotomicNumber DirichletCharacter::value(std::uint64_t a) const {
  const auto x = exponent_at(a);
  if (!x) return CyclotomicNumber(order_);
  const std::uint64_t step = group_->exponent() / order_;
  return CyclotomicNumber::zeta_power(order_, static_cast<std::int64_t>(*x / step));
}

int DirichletCharacter::parity() const {
  const std::uint64_t N = modulus();
  return *exponent_at((N + N - 1) % N) == 0 ? 1 : -1;
}

bool DirichletCharacter::is_trivial_on(const std::vector<std::uint64_t>& subgroup) const {
  for (std::uint64_t h : subgroup) {
    const auto x = exponent_at(h);
    if (!x || *x != 0) return false;
  }
  return true;
}

DirichletCharacter DirichletCharacter::galois_conjugate(std::uint64_t j) const {
  if (std::gcd(j, order_) != 1)
    throw std::invalid_argument("DirichletCharacter::galois_conjugate: exponent not a unit");
  std::vector<std::uint64_t> e = exponents_;
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = e[i] * (j % group_->generators()[i].order) % group_->generators()[i].order;
  return DirichletCharacter(group_, std::move(e));
}

std::uint64_t DirichletCharacter::conductor() const {
  const std::uint64_t N = modulus();
  for (std::uint64_t f : divisors(N)) {
    bool factors = true;
    for (std::uint64_t a = 1 % f; a < N && factors; a += f)
      if (group_->is_unit(a) && *exponent_at(a) != 0) factors = false;
    if (factors) return f;
  }
  return N;
}

DirichletCharacter DirichletCharacter::primitivize() const {
  const std::uint64_t N = modulus();
  const std::uint64_t f = conductor();
  auto target = std::make_shared<const UnitGroup>(f);
  const std::uint64_t E = group_->exponent();
  std::vector<std::uint64_t> e;
  for (const auto& g : target->generators()) {
    std::uint64_t a = g.generator;
    while (!group_->is_unit(a)) a += f;
    e.push_back(*exponent_at(a % N) * g.order / E);
  }
  return DirichletCharacter(std::move(target), std::move(e));
}

Rational bernoulli_number(std::uint64_t k) {
  // sum_{j=0}^{m} C(m+1, j) B_j = 0, with B_1 = -1/2.
  std::vector<Rational> B(k + 1);
  B[0] = 1;
  for (std::uint64_t m = 1; m <= k; ++m) {
    Rational acc = 0;
    Integer binom = 1;  // C(m+1, j)
    for (std::uint64_t j = 0; j < m; ++j) {
      acc += binom * B[j];
      binom = binom * (m + 1 - j) / (j + 1);
    }
    B[m] = -acc / Rational(m + 1);
  }
  return B[k];
}

QPoly bernoulli_polynomial(std::uint64_t k) {
  std::vector<Rational> coeffs(k + 1);
  Integer binom = 1;  // C(k, j)
  for (std::uint64_t j = 0; j <= k; ++j) {
    coeffs[k - j] = binom * bernoulli_number(j);
    binom = binom * (k - j) / (j + 1);
  }
  return QPoly(std::move(coeffs));
}

CyclotomicNumber generalized_bernoulli(const DirichletCharacter& chi, std::uint64_t k) {
  if (k == 0) throw std::invalid_argument("generalized_bernoulli: k must be positive");
  const std::uint64_t f = chi.modulus();
  const QPoly bk = bernoulli_polynomial(k);
  CyclotomicNumber sum(chi.order());
  for (std::uint64_t a = 1; a <= f; ++a) {
    if (!chi.exponent_at(a)) continue;
    Rational x(a, f);
    x.canonicalize();
    sum += bk.evaluate(x) * chi.value(a);
  }
  return Rational(ipow(Integer(static_cast<unsigned long>(f)), k - 1)) * sum;
}

CyclotomicNumber dirichlet_l_value(const DirichletCharacter& chi, std::uint64_t k) {
  if (k == 0) throw std::invalid_argument("dirichlet_l_value: k must be positive");
  if (k == 1 && chi.is_trivial()) throw std::domain_error("dirichlet_l_value: zeta has a pole at s = 0");
  return Rational(-1, k) * generalized_bernoulli(chi.primitivize(), k);
}

void require_subgroup(std::uint64_t N, const std::vector<std::uint64_t>& subgroup) {
  const UnitGroup group(N);
  const auto H = normalize(N, subgroup);
  if (!contains(H, 1 % N)) throw std::invalid_argument("subgroup must contain 1");
  for (std::uint64_t a : H) {
    if (!group.is_unit(a)) throw std::invalid_argument("subgroup element " + std::to_string(a) + " is not a unit");
    for (std::uint64_t b : H)
      if (!contains(H, a * b % N)) throw std::invalid_argument("subgroup is not closed under multiplication");
  }
}

std::uint64_t fixed_field_degree(std::uint64_t N, const std::vector<std::uint64_t>& H) {
  require_subgroup(N, H);
  return euler_phi(N) / normalize(N, H).size();
}

bool contains_minus_one(std::uint64_t N, const std::vector<std::uint64_t>& H) {
  return contains(normalize(N, H), (N + N - 1) % N);
}

Rational dedekind_zeta_abelian(std::uint64_t N, const std::vector<std::uint64_t>& H, std::uint64_t k) {
  require_subgroup(N, H);
  const auto h = normalize(N, H);
  const std::uint64_t E = UnitGroup(N).exponent();
  CyclotomicNumber acc(E, Rational(1));
  for (const auto& chi : DirichletCharacter::all(N))
    if (chi.is_trivial_on(h)) acc *= dirichlet_l_value(chi, k).embed(E);
  return acc.rational_value();
}

std::vector<std::uint64_t> power_preimage(std::uint64_t N, const std::vector<std::uint64_t>& H, std::uint64_t s) {
  const auto h = normalize(N, H);
  std::vector<std::uint64_t> out;
  for (std::uint64_t g : UnitGroup(N).elements())
    if (contains(h, pow_mod(g, s, N))) out.push_back(g);
  return out;
}

std::optional<std::uint64_t> cyclic_quotient_order(std::uint64_t N, const std::vector<std::uint64_t>& H) {
  const auto h = normalize(N, H);
  const std::uint64_t m = euler_phi(N) / h.size();
  for (std::uint64_t g : UnitGroup(N).elements()) {
    std::uint64_t k = 1;
    std::uint64_t x = g % N;
    while (!contains(h, x)) {
      x = x * g % N;
      ++k;
    }
    if (k == m) return m;
  }
  return std::nullopt;
}

std::vector<std::vector<std::uint64_t>> all_subgroups(std::uint64_t N) {
  const auto units = UnitGroup(N).elements();
  std::set<std::vector<std::uint64_t>> found;
  std::vector<std::vector<std::uint64_t>> cyclic;
  for (std::uint64_t g : units) {
    auto c = closure(N, {g});
    if (found.insert(c).second) cyclic.push_back(c);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<std::vector<std::uint64_t>> current(found.begin(), found.end());
    for (const auto& A : current)
      for (const auto& C : cyclic) {
        std::vector<std::uint64_t> gens = A;
        gens.insert(gens.end(), C.begin(), C.end());
        if (found.insert(closure(N, gens)).second) grew = true;
      }
  }
  std::vector<std::vector<std::uint64_t>> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return out;
}

std::uint64_t zeta_order_of_vanishing(std::uint64_t N, const std::vector<std::uint64_t>& H, std::uint64_t k) {
  if (k < 2) throw std::invalid_argument("zeta_order_of_vanishing: k = 1 is excluded");
  const std::uint64_t deg = fixed_field_degree(N, H);
  const std::uint64_t r1 = contains_minus_one(N, H) ? deg : 0;
  const std::uint64_t r2 = (deg - r1) / 2;
  return k % 2 == 1 ? r1 + r2 : r2;
}

VerificationReport verify_norm_identity_numberfield(std::uint64_t N, const std::vector<std::uint64_t>& H_in, std::uint64_t n) {
  require_subgroup(N, H_in);
  const auto H = normalize(N, H_in);
  if (!contains_minus_one(N, H)) throw std::invalid_argument("norm identity: -1 must lie in H");
  const auto m = cyclic_quotient_order(N, H);
  if (!m) throw std::invalid_argument("norm identity: (Z/N)^x / H is not cyclic");
  if (n == 0) throw std::invalid_argument("norm identity: n must be positive");
  VerificationReport report(field_label("numfield", N, H) + " n=" + std::to_string(n));

  const DirichletCharacter chi = kernel_character(N, H, *m);
  const std::uint64_t k = 2 * n;
  const CyclotomicNumber value = dirichlet_l_value(chi, k);
  report.add("L(chi, 1-2n)", "generalized_bernoulli", value.to_string(), Status::kPass);

  CyclotomicNumber separate(*m, Rational(1));
  bool equivariant = true;
  for (std::uint64_t j = 1; j <= *m; ++j) {
    if (std::gcd(j, *m) != 1) continue;
    const CyclotomicNumber conj_value = dirichlet_l_value(chi.galois_conjugate(j), k);
    equivariant = equivariant && conj_value == value.galois_conjugate(static_cast<std::int64_t>(j));
    separate *= conj_value;
  }
  Rational rhs = 1;
  for (const auto& s : squarefree_subsets(factorize(*m).primes())) {
    const Rational z = dedekind_zeta_abelian(N, power_preimage(N, H, s.product), k);
    rhs *= s.sign > 0 ? z : Rational(1) / z;
  }
  report.add_agreement("norm L(chi, 1-2n)", {{"conjugate_product", format_rational(value.norm_to_Q())},
                                             {"conjugate_characters", separate.to_string()},
                                             {"moebius_dedekind_zeta", format_rational(rhs)}});
  report.add("galois_equivariance", "L(chi^j) = sigma_j L(chi)", equivariant ? "equivariant" : "mismatch",
             equivariant ? Status::kPass : Status::kFail);
  return report;
}

VerificationReport verify_order_identity(std::uint64_t N, const std::vector<std::uint64_t>& H_in, std::uint64_t k) {
  require_subgroup(N, H_in);
  const auto H = normalize(N, H_in);
  const auto m = cyclic_quotient_order(N, H);
  if (!m) throw std::invalid_argument("order identity: (Z/N)^x / H is not cyclic");
  if (k < 2) throw std::invalid_argument("order identity: k = 1 is excluded");
  VerificationReport report(field_label("order", N, H) + " k=" + std::to_string(k));

  const DirichletCharacter chi = kernel_character(N, H, *m);
  const Integer phi_m(static_cast<unsigned long>(euler_phi(*m)));
  const int expected_parity = k % 2 == 0 ? 1 : -1;
  const Integer by_bernoulli = phi_m * (dirichlet_l_value(chi, k).is_zero() ? 1 : 0);
  const Integer by_parity = phi_m * (chi.parity() != expected_parity ? 1 : 0);

  Integer borel_sum = 0;
  Integer count_sum = 0;
  for (const auto& s : squarefree_subsets(factorize(*m).primes())) {
    const auto Hs = power_preimage(N, H, s.product);
    const std::uint64_t borel = zeta_order_of_vanishing(N, Hs, k);
    std::uint64_t zeros = 0;
    for (const auto& psi : DirichletCharacter::all(N))
      if (psi.is_trivial_on(Hs) && dirichlet_l_value(psi, k).is_zero()) ++zeros;
    report.add_agreement("ord zeta_{F_" + std::to_string(s.product) + "}",
                         {{"borel_table", std::to_string(borel)}, {"bernoulli_zero_count", std::to_string(zeros)}});
    borel_sum += s.sign * static_cast<long>(borel);
    count_sum += s.sign * static_cast<long>(zeros);
  }
  report.add_agreement("phi(m) ord L(chi)", {{"bernoulli_vanishing", by_bernoulli.get_str()},
                                             {"parity", by_parity.get_str()},
                                             {"moebius_borel", borel_sum.get_str()},
                                             {"moebius_bernoulli_count", count_sum.get_str()}});
  return report;
}

Rational predict_k_ratio(std::uint64_t N, const std::vector<std::uint64_t>& H, std::uint64_t n) {
  if (!contains_minus_one(N, H)) throw std::invalid_argument("predict_k_ratio: F' must be totally real");
  if (n == 0) throw std::invalid_argument("predict_k_ratio: n must be positive");
  const std::uint64_t r1 = fixed_field_degree(N, H);
  Rational denom = ipow(Integer(2), r1);
  if (n % 2 == 1 && r1 % 2 == 1) denom = -denom;
  Rational out = dedekind_zeta_abelian(N, H, 2 * n) / denom;
  out.canonicalize();
  return out;
}

VerificationReport prediction_record(std::uint64_t N, const std::vector<std::uint64_t>& H_in, std::uint64_t n) {
  const auto H = normalize(N, H_in);
  VerificationReport report(field_label("prediction", N, H) + " n=" + std::to_string(n));
  report.add_prediction("#K_" + std::to_string(4 * n - 2) + "/#K_" + std::to_string(4 * n - 1),
                        "zeta(1-2n)/((-1)^n*2)^r1", format_rational(predict_k_ratio(N, H, n)));
  return report;
}

}  // namespace eqlc::dirichlet
