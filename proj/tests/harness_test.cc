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


#include "mutsub/minilang/harness.h"

#include <filesystem>

#include "gtest/gtest.h"
#include "mutsub/error.h"
#include "mutsub/ingest.h"
#include "mutsub/minilang/worked_example.h"
#include "mutsub/minilang/parser.h"

namespace mutsub::minilang {
namespace {

const std::filesystem::path kData = MUTSUB_TEST_DATA_DIR;

std::vector<HarnessTest> Suite(const Program& p, std::string_view text) {
  std::vector<HarnessTest> tests = ParseTestSuite(text, "suite");
  RecordExpectations(p, tests);
  return tests;
}

TEST(ParseTestSuiteTest, Basic) {
  auto tests = ParseTestSuite(
      "# comment\n\n1,a=1;b=-1\n 7 , a = 0 ; b = 9223372036854775807 \n",
      "suite");
  ASSERT_EQ(tests.size(), 2u);
  EXPECT_EQ(tests[0].test_id, 1u);
  EXPECT_EQ(tests[0].inputs, (Valuation{{"a", 1}, {"b", -1}}));
  EXPECT_EQ(tests[1].Name(), "t7");
  EXPECT_EQ(tests[1].inputs.at("b"), 9223372036854775807);
  EXPECT_TRUE(ParseTestSuite("3,\n", "s")[0].inputs.empty());
}

TEST(ParseTestSuiteTest, Errors) {
  auto line_of = [](std::string_view text) -> std::size_t {
    try {
      ParseTestSuite(text, "s");
    } catch (const InputError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("1,a=1\n1,a=2\n"), 2u);
  EXPECT_EQ(line_of("x,a=1\n"), 1u);
  EXPECT_EQ(line_of("1 a=1\n"), 1u);
  EXPECT_EQ(line_of("\n1,a=one\n"), 2u);
  EXPECT_EQ(line_of("1,a=1;a=2\n"), 1u);
  EXPECT_EQ(line_of("1,=4\n"), 1u);
}

TEST(RunKillMatrixTest, SurvivorAndValueKill) {
  Program p = ParseProgram("fn f(a, b) { return a + b; }");
  auto mutants = GenerateMutants(p, {Operator::kAor});
  auto tests = Suite(p, "1,a=3;b=4\n2,a=0;b=0\n");
  KillMatrix m = RunKillMatrix(p, mutants, tests);
  ASSERT_EQ(m.MutantCount(), 4u);
  // a - b on (3, 4) gives value(-1) instead of value(7).
  EXPECT_EQ(Execute(mutants[0].mutated, tests[0].inputs),
            ExecutionOutcome::Value(-1));
  EXPECT_TRUE(m.Cell(0, 0));
  EXPECT_FALSE(m.Cell(0, 1));
  // a / b and a % b divide by zero on the second test.
  EXPECT_TRUE(m.Cell(2, 1));
  EXPECT_TRUE(m.Cell(3, 1));
  // a * b gives 0 on (0, 0), matching the original.
  EXPECT_FALSE(m.Cell(1, 1));
  EXPECT_EQ(m.tests()[1].name, "t2");
  EXPECT_EQ(m.mutants()[0].operator_tag, "AOR");
}

TEST(RunKillMatrixTest, SurvivingMutant) {
  Program p = ParseProgram("fn f(x) { return x * 1; }");
  auto mutants = GenerateMutants(p, {Operator::kAor});
  KillMatrix m = RunKillMatrix(p, mutants, Suite(p, "1,x=6\n"));
  // x / 1 behaves like the original.
  EXPECT_FALSE(m.IsKilled(2));
  EXPECT_TRUE(m.IsKilled(0));
}

TEST(RunKillMatrixTest, InfiniteLoopKilledByStepLimit) {
  Program p = ParseProgram(
      "fn f(n) { i = 0; while (i < n) { i = i + 1; } return i; }");
  auto mutants = GenerateMutants(p, {Operator::kAor});
  auto tests = Suite(p, "1,n=3\n");
  RunOptions options;
  options.step_limit = 1000;
  KillMatrix m = RunKillMatrix(p, mutants, tests, options);
  // i = i - 1 never reaches n.
  ASSERT_EQ(Execute(mutants[0].mutated, tests[0].inputs, 1000).kind,
            ExecutionOutcome::Kind::kStepLimitExceeded);
  EXPECT_TRUE(m.Cell(0, 0));
}

TEST(RunKillMatrixTest, CellsMatchDirectExecution) {
  Program p = ParseProgram(kMultiplySource);
  auto mutants = GenerateMutants(p, AllOperators());
  auto tests = WorkedExampleTests();
  KillMatrix m = RunKillMatrix(p, mutants, tests);
  ASSERT_EQ(m.MutantCount(), mutants.size());
  for (std::size_t i = 0; i < mutants.size(); ++i) {
    EXPECT_EQ(m.mutants()[i].line_number, mutants[i].line_number);
    EXPECT_EQ(m.mutants()[i].operator_tag, Tag(mutants[i].edit.op));
    for (std::size_t t = 0; t < tests.size(); ++t) {
      ExecutionOutcome outcome = Execute(mutants[i].mutated, tests[t].inputs);
      EXPECT_EQ(m.Cell(i, t), !outcome.SameBehaviour(tests[t].expected));
    }
  }
}

TEST(RunKillMatrixTest, ParallelEqualsSequential) {
  Program p = ParseProgram(kMultiplySource);
  auto mutants = GenerateMutants(p, AllOperators());
  auto tests = WorkedExampleTests();
  RunOptions sequential;
  sequential.source_path = "multiply.ml";
  sequential.mutant_dir = "mutants";
  RunOptions parallel = sequential;
  parallel.jobs = 4;
  KillMatrix expected = RunKillMatrix(p, mutants, tests, sequential);
  EXPECT_EQ(RunKillMatrix(p, mutants, tests, parallel), expected);
  parallel.jobs = 0;
  EXPECT_EQ(RunKillMatrix(p, mutants, tests, parallel), expected);
  EXPECT_EQ(expected.mutants()[3].mutant_path, "mutants/mutant_3.ml");
  EXPECT_EQ(expected.mutants()[3].source_path, "multiply.ml");
}

TEST(RunKillMatrixTest, RejectsStaleExpectations) {
  Program p = ParseProgram(kMultiplySource);
  auto tests = WorkedExampleTests();
  tests[1].expected = ExecutionOutcome::Value(99);
  EXPECT_THROW(RunKillMatrix(p, GenerateMutants(p, AllOperators()), tests),
               Error);
}

TEST(RunKillMatrixTest, MultiplyFixtureSuite) {
  Program p = ParseProgram(
      ReadTextFile(kData / "fixtures" / "multiply" / "multiply.ml"));
  auto tests = LoadTestSuite(kData / "fixtures" / "multiply" / "tests.csv");
  ASSERT_EQ(tests.size(), 4u);
  RecordExpectations(p, tests);
  EXPECT_EQ(tests[0].expected, ExecutionOutcome::Value(-1));
  EXPECT_EQ(tests[1].expected, ExecutionOutcome::Value(1));
  EXPECT_EQ(tests[2].expected, ExecutionOutcome::Value(0));
  EXPECT_EQ(tests[3].expected, ExecutionOutcome::Value(0));
  KillMatrix m = RunKillMatrix(p, GenerateMutants(p, AllOperators()), tests);
  EXPECT_LT(m.KilledCount(), m.MutantCount());
  EXPECT_GT(m.KilledCount(), 0u);
}

}  // namespace
}  // namespace mutsub::minilang
