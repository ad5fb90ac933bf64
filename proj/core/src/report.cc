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

#include "mutsub/report.h"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <unordered_map>

#include "mutsub/error.h"
#include "mutsub/ingest.h"

namespace mutsub {

namespace {

std::string JoinIds(std::vector<MutantId> ids, char sep,
                    std::string_view prefix = "") {
  std::sort(ids.begin(), ids.end());
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i > 0) {
      out += sep;
    }
    out += prefix;
    out += std::to_string(ids[i]);
  }
  return out;
}

std::string DotEscape(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (c == '"' || c == '\\') {
      out += '\\';
    }
    out += c;
  }
  return out;
}

std::string FormatRatio(const std::optional<double>& ratio) {
  if (!ratio) {
    return "undefined";
  }
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.6f", *ratio);
  return buffer;
}

}  // namespace

std::vector<ReportRow> BuildReport(const KillMatrix& matrix, const Dmsg& dmsg) {
  std::unordered_map<MutantId, GroupId> group_of;
  for (const SubsumptionGroup& group : dmsg.groups) {
    for (MutantId id : group.mutant_ids) {
      auto index = matrix.FindMutant(id);
      if (!index) {
        throw Error("DMSG/matrix mismatch: mutant " + std::to_string(id) +
                    " is not in the matrix");
      }
      if (matrix.Row(*index) != group.kill_set) {
        throw Error("DMSG/matrix mismatch: mutant " + std::to_string(id) +
                    " does not have the kill set of group " +
                    std::to_string(group.group_id));
      }
      if (!group_of.emplace(id, group.group_id).second) {
        throw Error("DMSG/matrix mismatch: mutant " + std::to_string(id) +
                    " appears in more than one group");
      }
    }
  }
  if (group_of.size() != matrix.KilledCount()) {
    throw Error("DMSG/matrix mismatch: DMSG groups " +
                std::to_string(group_of.size()) + " mutants but the matrix has " +
                std::to_string(matrix.KilledCount()) + " killed mutants");
  }

  const std::size_t group_count = dmsg.groups.size();
  std::vector<std::vector<MutantId>> subsumes(group_count);
  std::vector<std::vector<MutantId>> subsumed_by(group_count);
  for (const auto& [from, to] : ContainmentEdges(dmsg.groups)) {
    const auto& to_members = dmsg.groups[to].mutant_ids;
    const auto& from_members = dmsg.groups[from].mutant_ids;
    subsumes[from].insert(subsumes[from].end(), to_members.begin(),
                          to_members.end());
    subsumed_by[to].insert(subsumed_by[to].end(), from_members.begin(),
                           from_members.end());
  }
  for (std::size_t g = 0; g < group_count; ++g) {
    std::sort(subsumes[g].begin(), subsumes[g].end());
    std::sort(subsumed_by[g].begin(), subsumed_by[g].end());
  }

  std::vector<std::size_t> order(matrix.MutantCount());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return matrix.mutants()[x].id < matrix.mutants()[y].id;
  });

  std::vector<ReportRow> rows;
  rows.reserve(order.size());
  for (std::size_t index : order) {
    const MutantRecord& mutant = matrix.mutants()[index];
    ReportRow row;
    row.mutant_id = mutant.id;
    row.mutant_path = mutant.mutant_path;
    row.source_path = mutant.source_path;
    row.line_number = mutant.line_number;
    row.failed_test_count = matrix.Row(index).Count();
    auto it = group_of.find(mutant.id);
    if (it != group_of.end()) {
      const SubsumptionGroup& group = dmsg.groups[it->second];
      row.is_subsuming = group.is_subsuming;
      row.subsumes = subsumes[it->second];
      row.subsumed_by = subsumed_by[it->second];
      for (MutantId other : group.mutant_ids) {
        if (other != mutant.id) {
          row.mutually_subsuming.push_back(other);
        }
      }
      std::sort(row.mutually_subsuming.begin(), row.mutually_subsuming.end());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string RenderReportCsv(const std::vector<ReportRow>& rows) {
  std::string out(kReportHeader);
  out += '\n';
  for (const ReportRow& row : rows) {
    out += std::to_string(row.mutant_id) + ',' + row.mutant_path + ',' +
           row.source_path + ',' + std::to_string(row.line_number) + ',' +
           (row.is_subsuming ? "true" : "false") + ',' +
           std::to_string(row.failed_test_count) + ',' +
           JoinIds(row.subsumes, '|') + ',' + JoinIds(row.subsumed_by, '|') +
           ',' + JoinIds(row.mutually_subsuming, '|') + '\n';
  }
  return out;
}

void EmitCsv(const std::vector<ReportRow>& rows,
             const std::filesystem::path& path) {
  WriteTextFile(path, RenderReportCsv(rows));
}

std::map<GroupId, std::string> DefaultGroupLabels(const Dmsg& dmsg) {
  std::map<GroupId, std::string> labels;
  for (const SubsumptionGroup& group : dmsg.groups) {
    labels[group.group_id] = JoinIds(group.mutant_ids, ',', "M");
  }
  return labels;
}

std::string EmitDmsgGraph(const Dmsg& dmsg,
                          const std::map<GroupId, std::string>& labels) {
  const std::map<GroupId, std::string> defaults = DefaultGroupLabels(dmsg);
  std::string out;
  out += "// Dynamic mutant subsumption graph.\n";
  out += "// Node: mutants killed by exactly the same tests; survived mutants "
         "are omitted.\n";
  out += "// Edge A -> B: A subsumes B. Edges are transitively reduced; the "
         "subsumes and\n";
  out += "// subsumed_by columns of report.csv list the full relation.\n";
  out += "// doublecircle: subsuming group (keep one mutant from each).\n";
  out += "digraph dmsg {\n";
  out += "  node [shape=circle];\n";
  for (const SubsumptionGroup& group : dmsg.groups) {
    auto it = labels.find(group.group_id);
    const std::string& label =
        it != labels.end() ? it->second : defaults.at(group.group_id);
    out += "  g" + std::to_string(group.group_id) + " [label=\"" +
           DotEscape(label) + "\"";
    if (group.is_subsuming) {
      out += ", shape=doublecircle";
    }
    out += "];\n";
  }
  for (const auto& [from, to] : dmsg.edges) {
    out += "  g" + std::to_string(dmsg.groups[from].group_id) + " -> g" +
           std::to_string(dmsg.groups[to].group_id) + ";\n";
  }
  out += "}\n";
  return out;
}

Summary Summarize(const KillMatrix& matrix, const Dmsg& dmsg,
                  const std::set<MutantId>& retained) {
  Summary s;
  s.mutants = matrix.MutantCount();
  s.killed = matrix.KilledCount();
  s.survived = s.mutants - s.killed;
  for (const MutantRecord& m : matrix.mutants()) {
    s.annotated_equivalent += m.AnnotatedEquivalent() ? 1 : 0;
  }
  s.groups = dmsg.groups.size();
  s.subsuming_groups = SubsumingGroups(dmsg).size();
  s.retained = retained.size();
  if (s.mutants > 0) {
    s.coverage_raw = RawMutationCoverage(matrix);
  }
  if (s.annotated_equivalent < s.mutants) {
    s.coverage = MutationCoverage(matrix);
  }
  return s;
}

std::string RenderSummary(const Summary& s) {
  std::string out;
  out += "mutants: " + std::to_string(s.mutants) + '\n';
  out += "killed: " + std::to_string(s.killed) + '\n';
  out += "survived: " + std::to_string(s.survived) + '\n';
  out += "annotated_equivalent: " + std::to_string(s.annotated_equivalent) +
         '\n';
  out += "groups: " + std::to_string(s.groups) + '\n';
  out += "subsuming_groups: " + std::to_string(s.subsuming_groups) + '\n';
  out += "retained: " + std::to_string(s.retained) + '\n';
  out += "mutation_coverage_raw: " + FormatRatio(s.coverage_raw) + '\n';
  out += "mutation_coverage: " + FormatRatio(s.coverage) + '\n';
  return out;
}

}  // namespace mutsub
