// Copyright 2026 The OneGraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "onegraph/graph.hpp"
#include "onegraph/ogtext.hpp"

namespace onegraph {

enum class FindingCode {
  kAmbiguousAbstract,
  kNonAbstractTarget,
  kChainedAbstract,
  kTypeCycle,
  kSubRelationCycle,
  kConflictingLabel,
  kUnknownLabelValue,
  kDanglingReification,
  kIncompleteReification,
  kAmbiguousReification,
  kBadTimeFormat,
  kBadNumberFormat,
};

std::string_view finding_code_name(FindingCode code);
Severity finding_severity(FindingCode code);

struct Finding {
  Severity severity = Severity::kError;
  FindingCode code = FindingCode::kAmbiguousAbstract;
  std::string subject;  // text of the offending object
  std::string message;

  friend bool operator==(const Finding&, const Finding&) = default;
};

// Runs every structural check. Findings are sorted by (subject, code,
// message) so the report is independent of id assignment.
std::vector<Finding> validate(const Graph& g);

// "<severity> <code> <subject> — <message>", subject escaped as a wire field.
std::string format_finding(const Finding& f);

bool has_errors(const std::vector<Finding>& findings);

}  // namespace onegraph
