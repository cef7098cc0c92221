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

#include "eqlc/kummer.hpp"

#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "eqlc/numtheory.hpp"
#include "eqlc/reconstruct.hpp"

namespace eqlc::curves {

namespace {

using GroupRingElt = std::vector<Integer>;  // Z[Z/(p-1)]

void add_product(GroupRingElt& acc, const GroupRingElt& a, const GroupRingElt& b, const Integer& scale) {
  const std::size_t n = acc.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (b[j] != 0) acc[(i + j) % n] += scale * a[i] * b[j];
  }
}

std::vector<std::uint64_t> fp_dlog_table(std::uint64_t p) {
  std::vector<std::uint64_t> table(p, 0);
  const std::uint64_t g = smallest_primitive_root(p);
  std::uint64_t x = 1;
  for (std::uint64_t k = 0; k + 1 < p; ++k, x = x * g % p) table[x] = k;
  return table;
}

NormCensus census_brute_force(std::uint64_t p, const FpPoly& f, std::size_t order) {
  NormCensus out(order + 1);
  for (std::size_t r = 1; r <= order; ++r) {
    const FieldExt field(p, static_cast<unsigned>(r));
    GroupRingElt row(p - 1, 0);
    std::vector<std::uint64_t> counts(p - 1, 0);
    for (std::uint64_t x = 0; x < field.size(); ++x) {
      const std::uint64_t y = field.eval(f, x);
      if (y != 0) ++counts[field.norm_class(y)];
    }
    for (std::size_t c = 0; c + 1 < p; ++c) row[c] = Integer(static_cast<unsigned long>(counts[c]));
    out[r] = std::move(row);
  }
  return out;
}

NormCensus census_closed_points(std::uint64_t p, const FpPoly& f, std::size_t order) {
  const std::size_t n = f.size() - 1;
  const std::uint64_t lead = f.back();
  const std::uint64_t lead_inv = fp_inverse(lead, p);
  FpPoly monic = f;
  for (auto& c : monic) c = c * lead_inv % p;
  const auto dlog = fp_dlog_table(p);
  const std::size_t classes = p - 1;

  // Residues h of degree < n with det(h mod monic f) != 0, by class of det.
  // Monic residues of each degree j < n are tallied separately.
  GroupRingElt all_residues(classes, 0);
  std::vector<GroupRingElt> monic_of_degree(n, GroupRingElt(classes, 0));
  const std::uint64_t residue_count = ipow(Integer(static_cast<unsigned long>(p)), n).get_ui();
  for (std::uint64_t idx = 0; idx < residue_count; ++idx) {
    FpPoly h(n);
    std::uint64_t v = idx;
    for (std::size_t i = 0; i < n; ++i, v /= p) h[i] = v % p;
    h = fp_normalize(std::move(h), p);
    const std::uint64_t det = fp_norm_det(h, monic, p);
    if (det == 0) continue;
    all_residues[dlog[det]] += 1;
    if (!h.empty() && h.back() == 1) monic_of_degree[h.size() - 1][dlog[det]] += 1;
  }
  if (n > 0) {
    // The constant polynomial 1 is the only monic residue of degree 0.
    monic_of_degree[0].assign(classes, 0);
    monic_of_degree[0][0] = 1;
  }

  // M_j: monic g of degree j coprime to f, graded by class of Res(g, f)
  // = (-1)^{jn} lead^j det(g mod monic f).
  std::vector<GroupRingElt> M(order + 1, GroupRingElt(classes, 0));
  M[0][0] = 1;
  const std::uint64_t minus_one = dlog[p - 1];
  for (std::size_t j = 1; j <= order; ++j) {
    const std::uint64_t twist =
        ((j * n % 2 == 1 ? minus_one : 0) + (j % classes) * dlog[lead]) % classes;
    const GroupRingElt& base = j < n ? monic_of_degree[j] : all_residues;
    const Integer mult = j < n ? Integer(1) : ipow(Integer(static_cast<unsigned long>(p)), j - n);
    for (std::size_t c = 0; c < classes; ++c) M[j][(c + twist) % classes] = base[c] * mult;
  }

  // Logarithmic derivative: N_r = r M_r - sum_{i<r} N_i M_{r-i}.
  NormCensus out(order + 1);
  for (std::size_t r = 1; r <= order; ++r) {
    GroupRingElt row(classes, 0);
    for (std::size_t c = 0; c < classes; ++c) row[c] = Integer(static_cast<unsigned long>(r)) * M[r][c];
    for (std::size_t i = 1; i < r; ++i) add_product(row, out[i], M[r - i], Integer(-1));
    out[r] = std::move(row);
  }
  return out;
}

void check_census_order(const NormCensus& census, std::size_t order) {
  if (census.size() < order + 1) throw std::invalid_argument("census shorter than requested order");
}

CyclotomicNumber character_sum(const GroupRingElt& row, std::uint64_t level, std::uint64_t exponent,
                               std::uint64_t divide_by) {
  // sum over classes c with divide_by | c of row[c] * zeta_level^{exponent * c / divide_by}
  std::vector<Rational> v(level, Rational(0));
  for (std::size_t c = 0; c < row.size(); ++c) {
    if (c % divide_by != 0 || row[c] == 0) continue;
    v[(exponent * (c / divide_by)) % level] += row[c];
  }
  return CyclotomicNumber(level, std::move(v));
}

std::string census_row_string(const GroupRingElt& row) {
  std::string out = "[";
  for (std::size_t c = 0; c < row.size(); ++c) out += (c ? "," : "") + row[c].get_str();
  return out + "]";
}

}  // namespace

KummerCover KummerCover::make(std::uint64_t p, std::uint64_t d, FpPoly f) {
  if (!is_prime(p)) throw std::invalid_argument("KummerCover: " + std::to_string(p) + " is not prime");
  if (d == 0 || (p - 1) % d != 0)
    throw std::invalid_argument("KummerCover: d = " + std::to_string(d) + " does not divide p - 1");
  f = fp_normalize(std::move(f), p);
  if (f.empty()) throw std::invalid_argument("KummerCover: f must be nonzero");
  return KummerCover{p, d, std::move(f), smallest_primitive_root(p)};
}

std::string KummerCover::label() const {
  std::ostringstream os;
  os << "curve p=" << p << " d=" << d << " f=[";
  for (std::size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << f[i];
  os << "]";
  return os.str();
}

bool brute_force_feasible(std::uint64_t p, std::size_t r) {
  return ipow(Integer(static_cast<unsigned long>(p)), r) <= FieldExt::kMaxSize;
}

NormCensus norm_census(std::uint64_t p, const FpPoly& f_in, std::size_t order, CensusEngine engine) {
  if (!is_prime(p)) throw std::invalid_argument("norm_census: " + std::to_string(p) + " is not prime");
  const FpPoly f = fp_normalize(f_in, p);
  if (f.empty()) throw std::invalid_argument("norm_census: f must be nonzero");
  switch (engine) {
    case CensusEngine::kBruteForce:
      return census_brute_force(p, f, order);
    case CensusEngine::kClosedPoints:
      return census_closed_points(p, f, order);
    case CensusEngine::kAuto:
      break;
  }
  std::size_t feasible = 0;
  while (feasible < order && brute_force_feasible(p, feasible + 1)) ++feasible;
  NormCensus out = census_brute_force(p, f, feasible);
  if (feasible < order) {
    NormCensus rest = census_closed_points(p, f, order);
    out.resize(order + 1);
    for (std::size_t r = feasible + 1; r <= order; ++r) out[r] = std::move(rest[r]);
  }
  return out;
}

std::uint64_t frobenius_class(const KummerCover& cover, const FieldExt& field, std::uint64_t x) {
  if (field.p() != cover.p) throw std::invalid_argument("frobenius_class: field characteristic mismatch");
  const std::uint64_t y = field.eval(cover.f, x);
  if (y == 0) throw std::domain_error("frobenius_class: x is a zero of f");
  return field.norm_class(y) % cover.d;
}

Integer count_points_base(const NormCensus& census, std::size_t r) {
  check_census_order(census, r);
  Integer total = 0;
  for (const auto& n : census[r]) total += n;
  return total;
}

Integer count_points_cover(const NormCensus& census, std::uint64_t d, std::size_t r) {
  check_census_order(census, r);
  Integer total = 0;
  for (std::size_t c = 0; c < census[r].size(); c += d) total += census[r][c];
  return total * static_cast<unsigned long>(d);
}

Integer count_points(std::uint64_t p, const FpPoly& f, std::size_t r) {
  return count_points_base(norm_census(p, f, r), r);
}

Integer count_points(const KummerCover& cover, std::size_t r) {
  return count_points_cover(norm_census(cover.p, cover.f, r), cover.d, r);
}

TruncatedLSeries zeta_series_from_counts(const std::vector<Integer>& counts) {
  std::vector<Rational> sums(counts.begin(), counts.end());
  return TruncatedLSeries::from_power_sums(sums);
}

TruncatedLSeries zeta_series_base(const NormCensus& census) {
  std::vector<Integer> counts;
  for (std::size_t r = 1; r < census.size(); ++r) counts.push_back(count_points_base(census, r));
  return zeta_series_from_counts(counts);
}

TruncatedLSeries zeta_series_cover(const NormCensus& census, std::uint64_t d) {
  std::vector<Integer> counts;
  for (std::size_t r = 1; r < census.size(); ++r) counts.push_back(count_points_cover(census, d, r));
  return zeta_series_from_counts(counts);
}

TruncatedLSeries l_series_kummer(const NormCensus& census, std::uint64_t d, std::uint64_t a) {
  std::vector<CyclotomicNumber> sums;
  for (std::size_t r = 1; r < census.size(); ++r) sums.push_back(character_sum(census[r], d, a % d, 1));
  return TruncatedLSeries::from_power_sums(d, sums);
}

TruncatedLSeries l_series_kummer(const KummerCover& cover, std::uint64_t a, std::size_t order) {
  return l_series_kummer(norm_census(cover.p, cover.f, order), cover.d, a);
}

TruncatedLSeries intermediate_l_series(const NormCensus& census, std::uint64_t d, std::uint64_t e, std::uint64_t b) {
  if (e == 0 || d % e != 0) throw std::invalid_argument("intermediate_l_series: e must divide d");
  const std::uint64_t dp = d / e;
  std::vector<CyclotomicNumber> sums;
  for (std::size_t r = 1; r < census.size(); ++r)
    sums.push_back(Rational(static_cast<unsigned long>(dp)) * character_sum(census[r], e, b % e, dp));
  return TruncatedLSeries::from_power_sums(e, sums);
}

VerificationReport cross_check_census(std::uint64_t p, const FpPoly& f, std::size_t order, NormCensus* merged) {
  std::ostringstream label;
  label << "census p=" << p << " f=[";
  for (std::size_t i = 0; i < f.size(); ++i) label << (i ? "," : "") << f[i];
  label << "]";
  VerificationReport report(label.str());
  const NormCensus closed = norm_census(p, f, order, CensusEngine::kClosedPoints);
  std::size_t feasible = 0;
  while (feasible < order && brute_force_feasible(p, feasible + 1)) ++feasible;
  const NormCensus brute = norm_census(p, f, feasible, CensusEngine::kBruteForce);
  for (std::size_t r = 1; r <= order; ++r) {
    const std::string q = "norm_census r=" + std::to_string(r);
    if (r <= feasible)
      report.add_agreement(q, {{"enumeration", census_row_string(brute[r])},
                               {"closed_points", census_row_string(closed[r])}});
    else
      report.add(q, "closed_points", census_row_string(closed[r]), Status::kSkip);
  }
  if (merged != nullptr) {
    *merged = closed;
    for (std::size_t r = 1; r <= feasible; ++r) (*merged)[r] = brute[r];
  }
  return report;
}

VerificationReport verify_l_identities(const KummerCover& cover, std::size_t order) {
  return verify_l_identities(cover, order, norm_census(cover.p, cover.f, order));
}

VerificationReport verify_l_identities(const KummerCover& cover, std::size_t order, const NormCensus& full_census) {
  check_census_order(full_census, order);
  const NormCensus census(full_census.begin(), full_census.begin() + static_cast<std::ptrdiff_t>(order + 1));
  const std::uint64_t d = cover.d;
  VerificationReport report(cover.label() + " B=" + std::to_string(order));

  std::vector<TruncatedLSeries> L;
  for (std::uint64_t a = 0; a < d; ++a) L.push_back(l_series_kummer(census, d, a));
  auto product_where = [&](auto pred) {
    TruncatedLSeries acc = TruncatedLSeries::one(d, order);
    for (std::uint64_t a = 0; a < d; ++a)
      if (pred(a)) acc = acc * L[a];
    return acc;
  };

  report.add_agreement("L(trivial) = zeta(X)", {{"character_sum", L[0].to_string()},
                                                {"point_count", zeta_series_base(census).embed(d).to_string()}});

  // Zeta functions of the intermediate covers Y/C_e, i.e. z^{d/e} = f(x).
  std::map<std::uint64_t, TruncatedLSeries> zeta_quotient;
  for (std::uint64_t e : divisors(d)) {
    const std::uint64_t dp = d / e;
    const TruncatedLSeries zeta = zeta_series_cover(census, dp).embed(d);
    zeta_quotient.emplace(e, zeta);
    const std::string tag = e == 1 ? "zeta(Y) = prod_a L(chi^a)" : "zeta(Y/C_" + std::to_string(e) + ") = prod_{e|a} L(chi^a)";
    report.add_agreement(tag, {{"point_count", zeta.to_string()},
                               {"l_product", product_where([&](std::uint64_t a) { return a % e == 0; }).to_string()}});

    // Descent: characters of C_{d/e} inflate to chi_d^{e b}.
    for (std::uint64_t b = 0; b < dp; ++b)
      report.add_agreement("descent e=" + std::to_string(e) + " b=" + std::to_string(b),
                           {{"quotient_cover", l_series_kummer(census, dp, b).embed(d).to_string()},
                            {"inflated", L[(e * b) % d].to_string()}});

    // Induction from C_e: the characters of C_d restricting to psi_b.
    for (std::uint64_t b = 0; b < e; ++b)
      report.add_agreement("induction e=" + std::to_string(e) + " b=" + std::to_string(b),
                           {{"intermediate_cover", intermediate_l_series(census, d, e, b).embed(d).to_string()},
                            {"l_product", product_where([&](std::uint64_t a) { return a % e == b; }).to_string()}});
  }

  // Moebius inversion over the primes of d.
  TruncatedLSeries moebius = TruncatedLSeries::one(d, order);
  for (const auto& s : squarefree_subsets(factorize(d).primes()))
    moebius = moebius * zeta_quotient.at(s.product).pow(s.sign);
  const TruncatedLSeries primitive_product = product_where([&](std::uint64_t a) { return std::gcd(a, d) == 1; });
  report.add_agreement("moebius: prod_{primitive} L = prod_S zeta(Y/C_S)^{+-1}",
                       {{"l_product", primitive_product.to_string()}, {"moebius_zeta", moebius.to_string()}});

  bool conj_ok = true;
  bool integral = true;
  for (std::uint64_t a = 0; a < d; ++a) {
    integral = integral && L[a].is_integral();
    for (std::uint64_t j = 1; j < d; ++j)
      if (std::gcd(j, d) == 1) conj_ok = conj_ok && L[a].galois_conjugate(static_cast<std::int64_t>(j)) == L[(a * j) % d];
  }
  report.add("galois_conjugation", "coefficientwise", conj_ok ? "equivariant" : "mismatch",
             conj_ok ? Status::kPass : Status::kFail);
  report.add("integrality", "coefficients in Z[zeta_d]", integral ? "integral" : "non-integral",
             integral ? Status::kPass : Status::kFail);

  // Rational functions and special values at s = -1, -2.
  const std::size_t max_deg = cover.f.size() - 1 + 2;
  if (order < 2 * max_deg + 2) return report;
  std::vector<std::optional<RationalFunction>> rational(d);
  for (std::uint64_t a = 0; a < d; ++a) {
    const Reconstruction rec = rational_reconstruction(L[a], max_deg);
    const std::string q = "L(chi^" + std::to_string(a) + ") rational function";
    if (const auto* rf = std::get_if<RationalFunction>(&rec)) {
      rational[a] = *rf;
      report.add(q, "berlekamp_massey", rf->to_string(), Status::kPass);
    } else {
      report.add(q, "berlekamp_massey", "insufficient order", a == 0 ? Status::kSkip : Status::kFail);
    }
  }
  if (d == 1) return report;
  // Zeta functions of the quotients, needed for the Moebius side.
  std::map<std::uint64_t, std::optional<RationalFunction>> zeta_rational;
  for (const auto& s : squarefree_subsets(factorize(d).primes())) {
    const Reconstruction rec = rational_reconstruction(zeta_quotient.at(s.product), max_deg);
    if (const auto* rf = std::get_if<RationalFunction>(&rec)) zeta_rational[s.product] = *rf;
    else zeta_rational[s.product] = std::nullopt;
  }
  for (std::uint64_t n = 1; n <= 2; ++n) {
    const std::string q = "norm L(chi, -" + std::to_string(n) + ")";
    if (!rational[1]) {
      report.add(q, "conjugate_product", "unavailable", Status::kSkip);
      continue;
    }
    const CyclotomicNumber value = l_special_value_curve(*rational[1], cover.p, n);
    std::vector<std::pair<std::string, std::string>> paths;
    paths.emplace_back("conjugate_product", format_rational(value.norm_to_Q()));
    CyclotomicNumber individual(d, Rational(1));
    bool all_available = true;
    for (std::uint64_t a = 1; a < d; ++a)
      if (std::gcd(a, d) == 1) {
        if (!rational[a]) all_available = false;
        else individual *= l_special_value_curve(*rational[a], cover.p, n);
      }
    if (all_available) paths.emplace_back("separate_reconstructions", individual.to_string());
    bool zeta_available = true;
    CyclotomicNumber via_zeta(d, Rational(1));
    for (const auto& s : squarefree_subsets(factorize(d).primes())) {
      const auto& rf = zeta_rational.at(s.product);
      if (!rf) {
        zeta_available = false;
        break;
      }
      const CyclotomicNumber v = l_special_value_curve(*rf, cover.p, n);
      via_zeta *= s.sign > 0 ? v : v.inverse();
    }
    if (zeta_available) paths.emplace_back("moebius_zeta_values", via_zeta.to_string());
    report.add_agreement(q, paths);
    if (!zeta_available) report.add(q, "moebius_zeta_values", "zeta of a quotient not reconstructible", Status::kSkip);
  }
  return report;
}

}  // namespace eqlc::curves
