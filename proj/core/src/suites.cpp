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

#include "eqlc/suites.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <map>
#include <stdexcept>
#include <thread>
#include <utility>

#include <nlohmann/json.hpp>

#include "eqlc/dirichlet.hpp"
#include "eqlc/ff_qlc.hpp"
#include "eqlc/kummer.hpp"

namespace eqlc::suites {

namespace {

using Task = std::function<VerificationReport()>;

VerificationReport run_tasks(const std::vector<Task>& tasks, unsigned jobs) {
  std::vector<VerificationReport> results(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        results[i] = tasks[i]();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(tasks.size())));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
  }
  VerificationReport merged;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    merged.append(results[i]);
  }
  return merged;
}

// Induced from the index-p subgroup, twice the regular representation, and for
// p^2 | m a permutation summand from the index-p^2 subgroup.
std::vector<ffqlc::InducedSummand> induced_sample(std::uint64_t m) {
  const std::uint64_t p = factorize(m).primes().front();
  std::vector<ffqlc::InducedSummand> out{{m / p, 1 % (m / p), 1}, {1, 0, 2}};
  if (m % (p * p) == 0) out.push_back({m / (p * p), 0, 1});
  return out;
}

}  // namespace

VerificationReport run_ffqlc(const FfqlcMatrix& matrix, unsigned jobs) {
  if (matrix.q.empty()) throw std::invalid_argument("ffqlc: empty q list");
  if (matrix.m_max == 0 || matrix.k_max == 0) throw std::invalid_argument("ffqlc: m-max and k-max must be positive");
  for (const auto& q : matrix.q) ffqlc::require_prime_power(q);

  std::vector<Task> tasks;
  for (const auto& q : matrix.q) {
    for (std::uint64_t m = 1; m <= matrix.m_max; ++m)
      for (std::uint64_t a = 0; a < m; ++a)
        for (std::uint64_t k = 1; k <= matrix.k_max; ++k)
          tasks.push_back([q, m, a, k] { return ffqlc::verify_main_theorem_ff(q, {m, a}, k); });
    if (!matrix.induced_sample) continue;
    for (std::uint64_t m = 2; m <= matrix.m_max; ++m) {
      const ffqlc::InducedRepFF rho{m, induced_sample(m)};
      for (std::uint64_t k = 1; k <= std::min<std::uint64_t>(matrix.k_max, 2); ++k)
        tasks.push_back([q, rho, k] { return ffqlc::verify_induced_ff(q, rho, k); });
    }
  }
  return run_tasks(tasks, jobs);
}

std::vector<CoverSpec> parse_cover_specs(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("cover spec: ") + e.what());
  }
  if (doc.is_object()) doc = nlohmann::json::array({doc});
  if (!doc.is_array()) throw std::invalid_argument("cover spec: expected an object or an array");
  std::vector<CoverSpec> out;
  for (const auto& item : doc) {
    if (!item.is_object() || !item.contains("p") || !item.contains("d") || !item.contains("f"))
      throw std::invalid_argument("cover spec: each entry needs p, d and f");
    CoverSpec spec;
    try {
      spec.p = item.at("p").get<std::uint64_t>();
      spec.d = item.at("d").get<std::uint64_t>();
      if (spec.p < 2) throw std::invalid_argument("cover spec: p must be prime");
      spec.f.clear();
      for (const auto& c : item.at("f")) {
        const auto v = c.get<std::int64_t>() % static_cast<std::int64_t>(spec.p);
        spec.f.push_back(static_cast<std::uint64_t>(v < 0 ? v + static_cast<std::int64_t>(spec.p) : v));
      }
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument(std::string("cover spec: ") + e.what());
    }
    curves::KummerCover::make(spec.p, spec.d, spec.f);
    out.push_back(std::move(spec));
  }
  return out;
}

std::size_t default_curve_order(const CoverSpec& spec) {
  const auto f = curves::fp_normalize(spec.f, spec.p);
  const std::size_t deg = f.empty() ? 0 : f.size() - 1;
  return 2 * (deg + 3);
}

VerificationReport run_curves(const std::vector<CoverSpec>& covers, std::size_t order, unsigned jobs) {
  std::vector<curves::KummerCover> made;
  for (const auto& c : covers) made.push_back(curves::KummerCover::make(c.p, c.d, c.f));

  // Group by (p, f) in order of first appearance.
  std::vector<std::pair<std::uint64_t, curves::FpPoly>> keys;
  std::map<std::pair<std::uint64_t, curves::FpPoly>, std::size_t> key_index;
  std::vector<std::size_t> group_of;
  std::vector<std::size_t> group_order;
  for (std::size_t i = 0; i < made.size(); ++i) {
    const auto key = std::make_pair(made[i].p, made[i].f);
    auto [it, inserted] = key_index.emplace(key, keys.size());
    if (inserted) {
      keys.push_back(key);
      group_order.push_back(0);
    }
    group_of.push_back(it->second);
    const std::size_t want = order != 0 ? order : default_curve_order(covers[i]);
    group_order[it->second] = std::max(group_order[it->second], want);
  }

  std::vector<curves::NormCensus> census(keys.size());
  std::vector<Task> census_tasks;
  for (std::size_t g = 0; g < keys.size(); ++g)
    census_tasks.push_back([&, g] { return curves::cross_check_census(keys[g].first, keys[g].second, group_order[g], &census[g]); });
  VerificationReport report = run_tasks(census_tasks, jobs);

  std::vector<Task> tasks;
  for (std::size_t i = 0; i < made.size(); ++i) {
    const std::size_t want = order != 0 ? order : default_curve_order(covers[i]);
    tasks.push_back([&, i, want] { return curves::verify_l_identities(made[i], want, census[group_of[i]]); });
  }
  report.append(run_tasks(tasks, jobs));
  return report;
}

std::vector<CoverSpec> factorization_matrix() {
  const std::vector<std::vector<std::int64_t>> polys{{0, 1}, {1, 1}, {0, 1, 0, 1}, {1, -1, 0, 1}};
  std::vector<CoverSpec> out;
  for (std::uint64_t p : {3, 5, 7}) {
    for (std::uint64_t d : divisors(p - 1)) {
      for (const auto& f : polys) {
        CoverSpec spec{p, d, {}};
        for (auto c : f) spec.f.push_back(static_cast<std::uint64_t>((c % static_cast<std::int64_t>(p) + static_cast<std::int64_t>(p)) % static_cast<std::int64_t>(p)));
        out.push_back(std::move(spec));
      }
    }
  }
  return out;
}

namespace {

// Conductor of the fixed field of H: lcm of the conductors of the characters
// trivial on H.
std::uint64_t field_conductor(std::uint64_t N, const std::vector<std::uint64_t>& H) {
  std::uint64_t f = 1;
  for (const auto& chi : dirichlet::DirichletCharacter::all(N))
    if (chi.is_trivial_on(H)) f = std::lcm(f, chi.conductor());
  return f;
}

}  // namespace

VerificationReport run_dirichlet(const DirichletMatrix& matrix, unsigned jobs) {
  if (matrix.N_max == 0 || matrix.n_max == 0) throw std::invalid_argument("dirichlet: N-max and n-max must be positive");
  if (matrix.k_min < 2 || matrix.k_max < matrix.k_min) throw std::invalid_argument("dirichlet: need 2 <= k-min <= k-max");
  std::vector<Task> tasks;
  for (std::uint64_t N = 1; N <= matrix.N_max; ++N) {
    for (const auto& H : dirichlet::all_subgroups(N)) {
      if (!dirichlet::cyclic_quotient_order(N, H)) continue;
      const bool totally_real = dirichlet::contains_minus_one(N, H);
      if (totally_real)
        for (std::uint64_t n = 1; n <= matrix.n_max; ++n)
          tasks.push_back([N, H, n] { return dirichlet::verify_norm_identity_numberfield(N, H, n); });
      for (std::uint64_t k = matrix.k_min; k <= matrix.k_max; ++k)
        tasks.push_back([N, H, k] { return dirichlet::verify_order_identity(N, H, k); });
      // One prediction per totally real field, at its own conductor.
      if (matrix.predictions && totally_real && field_conductor(N, H) == N)
        for (std::uint64_t n = 1; n <= matrix.n_max; ++n)
          tasks.push_back([N, H, n] { return dirichlet::prediction_record(N, H, n); });
    }
  }
  return run_tasks(tasks, jobs);
}

}  // namespace eqlc::suites
