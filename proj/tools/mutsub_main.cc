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

// mutsub: dynamic mutant subsumption analysis.
//
//   mutsub analyze --input matrix.csv [--manifest manifest.csv] --out DIR
//   mutsub analyze --input results/ --format results --out DIR
//   mutsub mutate  --input prog.ml --tests tests.csv [--operators AOR,ROR]
//   mutsub demo    [--out demo]

#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "mutsub/error.h"
#include "mutsub/minilang/mutator.h"
#include "mutsub/workflow.h"

namespace {

void AddOutputFlags(CLI::App& cmd, mutsub::AnalysisConfig& config,
                    bool& no_csv, bool& no_graph) {
  cmd.add_option("--out", config.out_dir, "Output directory")
      ->capture_default_str();
  cmd.add_flag("--no-csv", no_csv, "Do not write report.csv");
  cmd.add_flag("--no-graph", no_graph, "Do not write dmsg.dot");
}

void AddHarnessFlags(CLI::App& cmd, mutsub::AnalysisConfig& config,
                     std::string& operators) {
  cmd.add_option("--tests", config.tests, "Test-suite CSV (minilang input)");
  cmd.add_option("--operators", operators,
                 "Comma-separated operators: AOR,ROR,COND-NEG,BREAK-DEL,UOI-NEG")
      ->capture_default_str();
  cmd.add_option("--step-limit", config.step_limit,
                 "Statement budget per execution")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd.add_option("--jobs", config.jobs,
                 "Worker threads for mutant execution (0 = all cores)")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dynamic mutant subsumption analysis"};
  app.require_subcommand(1);

  mutsub::AnalysisConfig config;
  bool no_csv = false;
  bool no_graph = false;
  std::string operators = "AOR,ROR,COND-NEG,BREAK-DEL,UOI-NEG";

  const std::map<std::string, mutsub::InputKind> formats = {
      {"matrix", mutsub::InputKind::kMatrixCsv},
      {"results", mutsub::InputKind::kResultsDir},
      {"minilang", mutsub::InputKind::kMinilangSource}};

  CLI::App* analyze =
      app.add_subcommand("analyze", "Analyze a kill matrix or results directory");
  analyze->add_option("--input", config.input, "Input file or directory")
      ->required();
  analyze->add_option("--format", config.input_kind, "Input kind")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
      ->default_str("matrix");
  analyze->add_option("--manifest", config.manifest,
                      "Manifest CSV (defaults to manifest.csv beside the input)");
  AddHarnessFlags(*analyze, config, operators);
  AddOutputFlags(*analyze, config, no_csv, no_graph);

  CLI::App* mutate = app.add_subcommand(
      "mutate", "Mutate a mini-language program, run its tests, and analyze");
  mutate->add_option("--input", config.input, "Mini-language source file")
      ->required();
  AddHarnessFlags(*mutate, config, operators);
  AddOutputFlags(*mutate, config, no_csv, no_graph);

  std::filesystem::path demo_out = "demo";
  CLI::App* demo =
      app.add_subcommand("demo", "Reproduce the multiply worked example");
  demo->add_option("--out", demo_out, "Output directory")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  if (*demo) {
    return mutsub::CmdDemo(demo_out, mutsub::WorkedExampleExpectation(),
                           std::cout, std::cerr);
  }

  config.emit_csv = !no_csv;
  config.emit_graph = !no_graph;
  try {
    config.operators = mutsub::minilang::ParseOperatorList(operators);
  } catch (const mutsub::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  if (*mutate) {
    config.input_kind = mutsub::InputKind::kMinilangSource;
    return mutsub::CmdMutate(config, std::cout, std::cerr);
  }
  return mutsub::CmdAnalyze(config, std::cout, std::cerr);
}
