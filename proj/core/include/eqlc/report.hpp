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

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "eqlc/numtheory.hpp"

namespace eqlc {

enum class Status { kPass, kFail, kPrediction, kSkip };
enum class RecordKind { kCheck, kPrediction };

const char* to_string(Status s);
const char* to_string(RecordKind k);

struct ReportEntry {
  std::string case_id;
  std::string quantity;
  std::string path;
  std::string value;
  Status status = Status::kPass;
  RecordKind kind = RecordKind::kCheck;
};

// "num/den", including integers ("3/1").
std::string format_rational(const Rational& q);

class VerificationReport {
 public:
  VerificationReport() = default;
  explicit VerificationReport(std::string case_id) : case_id_(std::move(case_id)) {}

  const std::string& case_id() const { return case_id_; }
  const std::vector<ReportEntry>& entries() const { return entries_; }

  void add(std::string quantity, std::string path, std::string value, Status status);
  void add_prediction(std::string quantity, std::string path, std::string value);

  // One entry per path; all are PASS when every value string is identical
  // and all are FAIL otherwise. Returns whether they agreed.
  bool add_agreement(const std::string& quantity,
                     const std::vector<std::pair<std::string, std::string>>& path_values);

  void append(const VerificationReport& other);

  std::size_t count(Status s) const;
  bool all_passed() const { return count(Status::kFail) == 0; }

  std::string to_tsv() const;
  std::string to_json() const;

 private:
  std::string case_id_;
  std::vector<ReportEntry> entries_;
};

}  // namespace eqlc
