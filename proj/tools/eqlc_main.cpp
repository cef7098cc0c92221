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

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "eqlc/suites.hpp"

namespace {

constexpr int kExitUsage = 2;

struct OutputFlags {
  std::string format = "tsv";
  std::string out;
  unsigned jobs = 1;
};

void add_output_flags(CLI::App* cmd, OutputFlags& flags) {
  cmd->add_option("--format", flags.format, "Report format")->check(CLI::IsMember({"tsv", "json"}));
  cmd->add_option("--out", flags.out, "Write the report here instead of stdout");
  cmd->add_option("--jobs", flags.jobs, "Worker threads; output is identical for any value")->check(CLI::Range(1u, 256u));
}

eqlc::Integer parse_integer(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("not a positive integer: '" + s + "'");
  return eqlc::Integer(s);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int emit(const eqlc::VerificationReport& report, const OutputFlags& flags) {
  const std::string text = flags.format == "json" ? report.to_json() + "\n" : report.to_tsv();
  if (flags.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(flags.out, std::ios::binary);
    if (!out) {
      std::cerr << "eqlc: cannot write " << flags.out << "\n";
      return kExitUsage;
    }
    out << text;
  }
  return report.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of equivariant special-value identities"};
  app.require_subcommand(1);
  OutputFlags flags;

  std::vector<std::string> q_list{"2"};
  std::uint64_t m_max = 12;
  std::uint64_t k_max = 6;
  bool no_induced = false;
  auto* ffqlc = app.add_subcommand("ffqlc", "Finite-field characters of cyclic groups");
  ffqlc->add_option("--q", q_list, "Base field sizes (prime powers)")->delimiter(',')->required();
  ffqlc->add_option("--m-max", m_max, "Largest cyclic group order")->check(CLI::PositiveNumber);
  ffqlc->add_option("--k-max", k_max, "Largest K-degree index k")->check(CLI::PositiveNumber);
  ffqlc->add_flag("--no-induced", no_induced, "Skip the induced-representation sample");
  add_output_flags(ffqlc, flags);

  std::string spec_path;
  std::uint64_t p = 0;
  std::uint64_t d = 0;
  std::vector<std::int64_t> f;
  std::size_t order = 0;
  auto* curves = app.add_subcommand("curves", "Kummer covers of open subsets of the affine line");
  auto* spec_opt = curves->add_option("--spec", spec_path, "JSON cover spec file")->check(CLI::ExistingFile);
  auto* p_opt = curves->add_option("--p", p, "Prime");
  auto* d_opt = curves->add_option("--d", d, "Cover degree, dividing p-1");
  auto* f_opt = curves->add_option("--f", f, "Little-endian coefficients of f")->delimiter(',');
  curves->add_option("--order", order, "Truncation order (default 2*(deg f + 3))");
  spec_opt->excludes(p_opt)->excludes(d_opt)->excludes(f_opt);
  p_opt->needs(d_opt)->needs(f_opt);
  add_output_flags(curves, flags);

  eqlc::suites::DirichletMatrix dm;
  bool no_predictions = false;
  auto* dirichlet = app.add_subcommand("dirichlet", "Abelian number fields via Dirichlet characters");
  dirichlet->add_option("--N-max", dm.N_max, "Largest modulus")->check(CLI::PositiveNumber);
  dirichlet->add_option("--n-max", dm.n_max, "Largest n in L(chi, 1-2n)")->check(CLI::PositiveNumber);
  dirichlet->add_option("--k-max", dm.k_max, "Largest k for the order-of-vanishing identity")->check(CLI::Range(2, 64));
  dirichlet->add_flag("--no-predictions", no_predictions, "Omit PREDICTION records");
  add_output_flags(dirichlet, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*ffqlc) {
      eqlc::suites::FfqlcMatrix matrix;
      for (const auto& s : q_list) matrix.q.push_back(parse_integer(s));
      matrix.m_max = m_max;
      matrix.k_max = k_max;
      matrix.induced_sample = !no_induced;
      return emit(eqlc::suites::run_ffqlc(matrix, flags.jobs), flags);
    }
    if (*curves) {
      std::vector<eqlc::suites::CoverSpec> covers;
      if (!spec_path.empty()) {
        covers = eqlc::suites::parse_cover_specs(read_file(spec_path));
      } else if (*p_opt) {
        std::ostringstream json;
        json << "{\"p\":" << p << ",\"d\":" << d << ",\"f\":[";
        for (std::size_t i = 0; i < f.size(); ++i) json << (i ? "," : "") << f[i];
        json << "]}";
        covers = eqlc::suites::parse_cover_specs(json.str());
      } else {
        throw std::invalid_argument("curves: give --spec or --p/--d/--f");
      }
      return emit(eqlc::suites::run_curves(covers, order, flags.jobs), flags);
    }
    dm.predictions = !no_predictions;
    return emit(eqlc::suites::run_dirichlet(dm, flags.jobs), flags);
  } catch (const std::invalid_argument& e) {
    std::cerr << "eqlc: " << e.what() << "\n";
    return kExitUsage;
  }
}
