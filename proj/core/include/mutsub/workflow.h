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

// End-to-end workflows behind the `mutsub` command line. Each Cmd* function
// returns the process exit status (0 success, 1 failure), writes diagnostics
// to `err` and progress to `out`, and writes files only below the configured
// output directory.

#ifndef MUTSUB_WORKFLOW_H
#define MUTSUB_WORKFLOW_H

#include <cstddef>
#include <filesystem>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "mutsub/kill_matrix.h"
#include "mutsub/minilang/interpreter.h"
#include "mutsub/minilang/mutator.h"
#include "mutsub/report.h"
#include "mutsub/subsumption.h"

namespace mutsub {

inline constexpr std::string_view kReportFileName = "report.csv";
inline constexpr std::string_view kGraphFileName = "dmsg.dot";
inline constexpr std::string_view kSummaryFileName = "summary.txt";
inline constexpr std::string_view kMatrixFileName = "matrix.csv";

enum class InputKind { kMatrixCsv, kResultsDir, kMinilangSource };

struct AnalysisConfig {
  InputKind input_kind = InputKind::kMatrixCsv;
  std::filesystem::path input;
  // Matrix input only; defaults to manifest.csv next to the matrix if present.
  std::optional<std::filesystem::path> manifest;
  // Minilang input only.
  std::optional<std::filesystem::path> tests;
  std::set<minilang::Operator> operators = minilang::AllOperators();
  std::size_t step_limit = minilang::kDefaultStepLimit;
  unsigned jobs = 1;
  std::filesystem::path out_dir = "out";
  bool emit_csv = true;
  bool emit_graph = true;
  bool emit_summary = true;
};

struct AnalysisResult {
  std::vector<SubsumptionGroup> groups;
  Dmsg dmsg;
  std::set<GroupId> subsuming;
  std::set<MutantId> retained;
  std::vector<ReportRow> rows;
  Summary summary;
};

// Group, graph, subsuming set, filter and report for a matrix. Never writes.
AnalysisResult AnalyzeMatrix(const KillMatrix& matrix);

// Writes the requested report.csv / dmsg.dot / summary.txt into out_dir and
// reads each back to confirm the bytes landed. Throws mutsub::Error on
// failure.
void WriteArtifacts(const AnalysisResult& result, const AnalysisConfig& config);

int CmdAnalyze(const AnalysisConfig& config, std::ostream& out,
               std::ostream& err);
int CmdMutate(const AnalysisConfig& config, std::ostream& out,
              std::ostream& err);

// Structure the worked example must reproduce. Groups and edges are compared
// exactly; `retain_one_of` requires exactly one retained mutant from each
// listed set and nothing else.
struct ExpectedStructure {
  std::vector<std::vector<MutantId>> groups;
  std::vector<Edge> edges;
  std::set<GroupId> subsuming;
  std::vector<std::set<MutantId>> retain_one_of;
  std::set<MutantId> survived;
};

ExpectedStructure WorkedExampleExpectation();

// Runs the worked-example matrix through the whole pipeline into out_dir and
// checks the outcome against `expected`, printing one line per check.
int CmdDemo(const std::filesystem::path& out_dir,
            const ExpectedStructure& expected, std::ostream& out,
            std::ostream& err);

}  // namespace mutsub

#endif  // MUTSUB_WORKFLOW_H
