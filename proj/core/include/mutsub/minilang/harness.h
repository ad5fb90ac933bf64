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

#ifndef MUTSUB_MINILANG_HARNESS_H
#define MUTSUB_MINILANG_HARNESS_H

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "mutsub/kill_matrix.h"
#include "mutsub/minilang/interpreter.h"
#include "mutsub/minilang/mutator.h"

namespace mutsub::minilang {

struct HarnessTest {
  std::uint64_t test_id = 0;
  Valuation inputs;
  // Outcome of the original program, filled in by RecordExpectations.
  ExecutionOutcome expected;

  // Column name in the kill matrix: "t<test_id>".
  std::string Name() const { return "t" + std::to_string(test_id); }
};

// Test-suite CSV, one test per line:  <test_id>,<param>=<int>;<param>=<int>
// Blank lines and lines starting with '#' are skipped. Throws
// mutsub::InputError on malformed lines or duplicate test ids.
std::vector<HarnessTest> ParseTestSuite(std::string_view text,
                                        const std::string& origin);
std::vector<HarnessTest> LoadTestSuite(const std::filesystem::path& path);

// Runs the original program on every test and stores its outcome.
void RecordExpectations(const Program& program,
                        std::vector<HarnessTest>& tests,
                        std::size_t step_limit = kDefaultStepLimit);

struct RunOptions {
  std::size_t step_limit = kDefaultStepLimit;
  // Worker threads; 0 picks the hardware concurrency. Results are identical
  // for every value.
  unsigned jobs = 1;
  // Copied into every MutantRecord.
  std::string source_path;
  // mutant_path of mutant i becomes mutant_dir + "/mutant_<i>.ml" when set.
  std::string mutant_dir;
};

// cell(m, t) is true iff mutant m's outcome on t differs from t.expected in
// kind, or in value for value outcomes.
KillMatrix RunKillMatrix(const Program& program,
                         const std::vector<GeneratedMutant>& mutants,
                         const std::vector<HarnessTest>& tests,
                         const RunOptions& options = {});

}  // namespace mutsub::minilang

#endif  // MUTSUB_MINILANG_HARNESS_H
