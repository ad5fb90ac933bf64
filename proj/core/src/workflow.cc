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

#include "mutsub/workflow.h"

#include <system_error>

#include "mutsub/error.h"
#include "mutsub/ingest.h"
#include "mutsub/minilang/harness.h"
#include "mutsub/minilang/worked_example.h"
#include "mutsub/minilang/parser.h"
#include "mutsub/minilang/printer.h"

namespace mutsub {

namespace {

void WriteVerified(const std::filesystem::path& path, const std::string& text) {
  WriteTextFile(path, text);
  if (ReadTextFile(path) != text) {
    throw Error(path.string() + ": file content differs after writing");
  }
}

void PrepareOutDir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec || !std::filesystem::is_directory(dir)) {
    throw Error(dir.string() + ": cannot create output directory" +
                (ec ? " (" + ec.message() + ")" : ""));
  }
}

std::string IdList(const std::vector<MutantId>& ids) {
  std::string out = "{";
  for (std::size_t i = 0; i < ids.size(); ++i) {
    out += (i > 0 ? "," : "") + ("M" + std::to_string(ids[i]));
  }
  return out + "}";
}

std::string IdList(const std::set<MutantId>& ids) {
  return IdList(std::vector<MutantId>(ids.begin(), ids.end()));
}

std::string EdgeList(const Dmsg& dmsg, const std::vector<Edge>& edges) {
  std::string out;
  for (const auto& [from, to] : edges) {
    if (!out.empty()) {
      out += ' ';
    }
    if (from < dmsg.groups.size() && to < dmsg.groups.size()) {
      out += IdList(dmsg.groups[from].mutant_ids) + "->" +
             IdList(dmsg.groups[to].mutant_ids);
    } else {
      out += "g" + std::to_string(from) + "->g" + std::to_string(to);
    }
  }
  return out.empty() ? "(none)" : out;
}

int AnalyzeAndWrite(const KillMatrix& matrix, const AnalysisConfig& config,
                    std::ostream& out) {
  AnalysisResult result = AnalyzeMatrix(matrix);
  WriteArtifacts(result, config);
  out << RenderSummary(result.summary);
  return 0;
}

KillMatrix LoadConfiguredMatrix(const AnalysisConfig& config) {
  if (config.input_kind == InputKind::kResultsDir) {
    return LoadPerMutantResults(config.input);
  }
  std::optional<std::filesystem::path> manifest = config.manifest;
  if (!manifest) {
    std::filesystem::path sibling =
        config.input.parent_path() / kManifestFileName;
    if (std::filesystem::is_regular_file(sibling)) {
      manifest = sibling;
    }
  }
  return LoadKillMatrixCsv(config.input, manifest);
}

}  // namespace

AnalysisResult AnalyzeMatrix(const KillMatrix& matrix) {
  AnalysisResult result;
  result.groups = GroupMutants(matrix);
  result.dmsg = BuildDmsg(result.groups);
  result.subsuming = SubsumingGroups(result.dmsg);
  result.retained = FilterRedundant(matrix, result.dmsg);
  result.rows = BuildReport(matrix, result.dmsg);
  result.summary = Summarize(matrix, result.dmsg, result.retained);
  return result;
}

void WriteArtifacts(const AnalysisResult& result, const AnalysisConfig& config) {
  PrepareOutDir(config.out_dir);
  if (config.emit_csv) {
    WriteVerified(config.out_dir / kReportFileName,
                  RenderReportCsv(result.rows));
  }
  if (config.emit_graph) {
    WriteVerified(config.out_dir / kGraphFileName,
                  EmitDmsgGraph(result.dmsg, DefaultGroupLabels(result.dmsg)));
  }
  if (config.emit_summary) {
    WriteVerified(config.out_dir / kSummaryFileName,
                  RenderSummary(result.summary));
  }
}

int CmdAnalyze(const AnalysisConfig& config, std::ostream& out,
               std::ostream& err) {
  if (config.input_kind == InputKind::kMinilangSource) {
    return CmdMutate(config, out, err);
  }
  try {
    KillMatrix matrix = LoadConfiguredMatrix(config);
    if (matrix.MutantCount() == 0) {
      err << "error: " << config.input.string() << ": no mutants to analyze\n";
      return 1;
    }
    return AnalyzeAndWrite(matrix, config, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

int CmdMutate(const AnalysisConfig& config, std::ostream& out,
              std::ostream& err) {
  using namespace minilang;
  try {
    if (!config.tests) {
      err << "error: a test-suite file is required (--tests)\n";
      return 1;
    }
    Program program;
    try {
      program = ParseProgram(ReadTextFile(config.input));
    } catch (const SyntaxError& e) {
      err << "error: " << config.input.string() << ":" << e.what() << '\n';
      return 1;
    }
    std::vector<HarnessTest> tests = LoadTestSuite(*config.tests);
    if (tests.empty()) {
      err << "error: " << config.tests->string() << ": no tests\n";
      return 1;
    }
    RecordExpectations(program, tests, config.step_limit);

    std::vector<GeneratedMutant> mutants =
        GenerateMutants(program, config.operators);

    PrepareOutDir(config.out_dir);
    const std::filesystem::path mutant_dir = config.out_dir / "mutants";
    std::filesystem::create_directories(mutant_dir);
    for (const GeneratedMutant& mutant : mutants) {
      WriteVerified(mutant_dir / ("mutant_" + std::to_string(mutant.mutant_id) +
                                  ".ml"),
                    Render(mutant.mutated));
    }

    RunOptions options;
    options.step_limit = config.step_limit;
    options.jobs = config.jobs;
    options.source_path = config.input.generic_string();
    options.mutant_dir = "mutants";
    KillMatrix matrix = RunKillMatrix(program, mutants, tests, options);
    WriteVerified(config.out_dir / kMatrixFileName, RenderKillMatrixCsv(matrix));
    WriteVerified(config.out_dir / kManifestFileName, RenderManifestCsv(matrix));

    out << mutants.size() << " mutants, " << tests.size() << " tests\n";
    return AnalyzeAndWrite(matrix, config, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

ExpectedStructure WorkedExampleExpectation() {
  ExpectedStructure expected;
  expected.groups = {{1, 4}, {2, 3, 6}, {5}};
  expected.edges = {{0, 1}, {1, 2}};
  expected.subsuming = {0};
  expected.retain_one_of = {{1, 4}};
  expected.survived = {0, 7};
  return expected;
}

int CmdDemo(const std::filesystem::path& out_dir,
            const ExpectedStructure& expected, std::ostream& out,
            std::ostream& err) {
  try {
    const KillMatrix matrix = minilang::WorkedExampleMatrix();
    AnalysisConfig config;
    config.out_dir = out_dir;
    AnalysisResult result = AnalyzeMatrix(matrix);
    PrepareOutDir(out_dir);
    WriteVerified(out_dir / kMatrixFileName, RenderKillMatrixCsv(matrix));
    WriteVerified(out_dir / kManifestFileName, RenderManifestCsv(matrix));
    WriteArtifacts(result, config);

    bool ok = true;
    auto check = [&](const std::string& what, const std::string& want,
                     const std::string& got) {
      bool pass = want == got;
      ok = ok && pass;
      out << (pass ? "[PASS] " : "[FAIL] ") << what << ": expected " << want
          << ", actual " << got << '\n';
    };

    std::string want_groups, got_groups;
    for (const auto& g : expected.groups) {
      want_groups += IdList(g);
    }
    for (const auto& g : result.dmsg.groups) {
      got_groups += IdList(g.mutant_ids);
    }
    check("groups", want_groups, got_groups);
    check("edges", EdgeList(result.dmsg, expected.edges),
          EdgeList(result.dmsg, result.dmsg.edges));

    auto group_sets = [&](const std::set<GroupId>& ids) {
      std::string text;
      for (GroupId g : ids) {
        text += g < result.dmsg.groups.size()
                    ? IdList(result.dmsg.groups[g].mutant_ids)
                    : "g" + std::to_string(g);
      }
      return text.empty() ? std::string("(none)") : text;
    };
    check("subsuming groups", group_sets(expected.subsuming),
          group_sets(result.subsuming));

    bool retained_ok = result.retained.size() == expected.retain_one_of.size();
    for (const auto& pool : expected.retain_one_of) {
      std::size_t hits = 0;
      for (MutantId id : result.retained) {
        hits += pool.contains(id) ? 1 : 0;
      }
      retained_ok = retained_ok && hits == 1;
    }
    std::string want_retained;
    for (const auto& pool : expected.retain_one_of) {
      want_retained += "one of " + IdList(pool);
    }
    check("retained", want_retained,
          retained_ok ? want_retained : IdList(result.retained));

    std::set<MutantId> survived;
    for (std::size_t i = 0; i < matrix.MutantCount(); ++i) {
      if (!matrix.IsKilled(i)) {
        survived.insert(matrix.mutants()[i].id);
      }
    }
    check("survived", IdList(expected.survived), IdList(survived));

    out << RenderSummary(result.summary);
    if (!ok) {
      err << "error: worked-example self-check failed\n";
      return 1;
    }
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace mutsub
