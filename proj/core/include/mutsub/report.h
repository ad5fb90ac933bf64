// Copyright 2026 The Mutsub Project Authors
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

#ifndef MUTSUB_REPORT_H
#define MUTSUB_REPORT_H

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "mutsub/kill_matrix.h"
#include "mutsub/subsumption.h"

namespace mutsub {

inline constexpr std::string_view kReportHeader =
    "mutant_id,mutant_path,source_path,line_number,is_subsuming,failed_tests,"
    "subsumes,subsumed_by,mutually_subsuming";

// One line of report.csv. Relation lists are ascending and come from the
// full containment relation between groups, so they include mutants that the
// reduced graph only reaches transitively.
struct ReportRow {
  MutantId mutant_id = 0;
  std::string mutant_path;
  std::string source_path;
  std::size_t line_number = 1;
  bool is_subsuming = false;
  std::size_t failed_test_count = 0;
  std::vector<MutantId> subsumes;
  std::vector<MutantId> subsumed_by;
  std::vector<MutantId> mutually_subsuming;

  friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

// One row per mutant in ascending id order, survived mutants included with
// empty relations. Throws mutsub::Error if `dmsg` was not built from
// `matrix`.
std::vector<ReportRow> BuildReport(const KillMatrix& matrix, const Dmsg& dmsg);

std::string RenderReportCsv(const std::vector<ReportRow>& rows);
void EmitCsv(const std::vector<ReportRow>& rows,
             const std::filesystem::path& path);

// "M1,M4" style labels for every group.
std::map<GroupId, std::string> DefaultGroupLabels(const Dmsg& dmsg);

// DOT digraph: one node per group, subsuming groups drawn as doublecircle,
// edges subsumer -> subsumed from the reduced relation. Groups without an
// entry in `labels` get their default label.
std::string EmitDmsgGraph(const Dmsg& dmsg,
                          const std::map<GroupId, std::string>& labels);

struct Summary {
  std::size_t mutants = 0;
  std::size_t killed = 0;
  std::size_t survived = 0;
  std::size_t annotated_equivalent = 0;
  std::size_t groups = 0;
  std::size_t subsuming_groups = 0;
  std::size_t retained = 0;
  // Unset when undefined (no mutants, or all annotated equivalent).
  std::optional<double> coverage_raw;
  std::optional<double> coverage;
};

Summary Summarize(const KillMatrix& matrix, const Dmsg& dmsg,
                  const std::set<MutantId>& retained);
std::string RenderSummary(const Summary& summary);

}  // namespace mutsub

#endif  // MUTSUB_REPORT_H
