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

#include "mutsub/minilang/worked_example.h"

#include <utility>

#include "mutsub/minilang/parser.h"

namespace mutsub::minilang {

const std::string_view kMultiplySource = R"(fn multiply(a, b) {
  if (b < 0) {
    a = -a;
    b = -b;
  }
  result = 0;
  i = 0;
  while (1) {
    if (i == b) {
      break;
    }
    result = result + a;
    i = i + 1;
  }
  return result;
}
)";

bool InRange(Range range, std::int64_t x) {
  switch (range) {
    case Range::kEmpty: return false;
    case Range::kAll: return true;
    case Range::kNonZero: return x != 0;
    case Range::kNegative: return x < 0;
  }
  return false;
}

std::vector<KillRegion> WorkedExampleRegions() {
  return {
      {0, Range::kEmpty, Range::kEmpty, true},
      {1, Range::kNonZero, Range::kNegative, false},
      {2, Range::kNonZero, Range::kNonZero, false},
      {3, Range::kNonZero, Range::kNonZero, false},
      {4, Range::kNonZero, Range::kNegative, false},
      {5, Range::kNonZero, Range::kAll, false},
      {6, Range::kNonZero, Range::kNonZero, false},
      {7, Range::kEmpty, Range::kEmpty, true},
  };
}

std::vector<HarnessTest> WorkedExampleTests() {
  std::vector<HarnessTest> tests = {
      {1, {{"a", 1}, {"b", -1}}, {}},
      {2, {{"a", 1}, {"b", 1}}, {}},
      {3, {{"a", 1}, {"b", 0}}, {}},
      {4, {{"a", 0}, {"b", -1}}, {}},
  };
  RecordExpectations(ParseProgram(kMultiplySource), tests);
  return tests;
}

KillMatrix WorkedExampleMatrix() {
  const std::vector<HarnessTest> tests = WorkedExampleTests();
  std::vector<TestRecord> test_records;
  for (std::size_t t = 0; t < tests.size(); ++t) {
    test_records.push_back({t, tests[t].Name()});
  }
  std::vector<MutantRecord> mutants;
  std::vector<KillSet> rows;
  for (const KillRegion& region : WorkedExampleRegions()) {
    MutantRecord record;
    record.id = region.mutant;
    record.source_path = "multiply.ml";
    record.mutant_path = "M" + std::to_string(region.mutant);
    record.line_number = 1;
    record.operator_tag = "REGION";
    if (region.equivalent) {
      record.equivalence_annotation = true;
    }
    mutants.push_back(std::move(record));

    KillSet row(tests.size());
    for (std::size_t t = 0; t < tests.size(); ++t) {
      if (region.Kills(tests[t].inputs.at("a"), tests[t].inputs.at("b"))) {
        row.Insert(t);
      }
    }
    rows.push_back(std::move(row));
  }
  return KillMatrix(std::move(mutants), std::move(test_records),
                    std::move(rows));
}

}  // namespace mutsub::minilang
