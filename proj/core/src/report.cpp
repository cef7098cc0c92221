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

#include "eqlc/report.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

namespace eqlc {

const char* to_string(Status s) {
  switch (s) {
    case Status::kPass: return "PASS";
    case Status::kFail: return "FAIL";
    case Status::kPrediction: return "PREDICTION";
    case Status::kSkip: return "SKIP";
  }
  return "?";
}

const char* to_string(RecordKind k) { return k == RecordKind::kCheck ? "CHECK" : "PREDICTION"; }

std::string format_rational(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

void VerificationReport::add(std::string quantity, std::string path, std::string value, Status status) {
  entries_.push_back({case_id_, std::move(quantity), std::move(path), std::move(value), status,
                      status == Status::kPrediction ? RecordKind::kPrediction : RecordKind::kCheck});
}

void VerificationReport::add_prediction(std::string quantity, std::string path, std::string value) {
  add(std::move(quantity), std::move(path), std::move(value), Status::kPrediction);
}

bool VerificationReport::add_agreement(const std::string& quantity,
                                       const std::vector<std::pair<std::string, std::string>>& path_values) {
  const bool agree = std::all_of(path_values.begin(), path_values.end(),
                                 [&](const auto& pv) { return pv.second == path_values.front().second; });
  for (const auto& [path, value] : path_values)
    add(quantity, path, value, agree ? Status::kPass : Status::kFail);
  return agree;
}

void VerificationReport::append(const VerificationReport& other) {
  entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
}

std::size_t VerificationReport::count(Status s) const {
  return static_cast<std::size_t>(
      std::count_if(entries_.begin(), entries_.end(), [s](const ReportEntry& e) { return e.status == s; }));
}

std::string VerificationReport::to_tsv() const {
  std::ostringstream os;
  os << "case\tquantity\tpath\tvalue\tstatus\n";
  for (const auto& e : entries_)
    os << e.case_id << '\t' << e.quantity << '\t' << e.path << '\t' << e.value << '\t' << to_string(e.status) << '\n';
  os << "# records=" << entries_.size() << " pass=" << count(Status::kPass) << " fail=" << count(Status::kFail)
     << " prediction=" << count(Status::kPrediction) << " skip=" << count(Status::kSkip) << '\n';
  return os.str();
}

std::string VerificationReport::to_json() const {
  nlohmann::ordered_json records = nlohmann::ordered_json::array();
  for (const auto& e : entries_)
    records.push_back({{"case", e.case_id},
                       {"quantity", e.quantity},
                       {"path", e.path},
                       {"value", e.value},
                       {"status", to_string(e.status)},
                       {"record", to_string(e.kind)}});
  nlohmann::ordered_json doc;
  doc["records"] = std::move(records);
  doc["summary"] = {{"records", entries_.size()},
                    {"pass", count(Status::kPass)},
                    {"fail", count(Status::kFail)},
                    {"prediction", count(Status::kPrediction)},
                    {"skip", count(Status::kSkip)}};
  return doc.dump(2) + "\n";
}

}  // namespace eqlc
