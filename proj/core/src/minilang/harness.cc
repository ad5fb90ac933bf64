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

#include <algorithm>
#include <atomic>
#include <charconv>
#include <set>
#include <thread>
#include <utility>

#include "mutsub/error.h"
#include "mutsub/ingest.h"

namespace mutsub::minilang {

namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

template <typename T>
bool ParseNumber(std::string_view text, T& value) {
  if (text.empty()) {
    return false;
  }
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(),
                                   value);
  return ec == std::errc() && ptr == text.data() + text.size();
}

}  // namespace

std::vector<HarnessTest> ParseTestSuite(std::string_view text,
                                        const std::string& origin) {
  std::vector<HarnessTest> tests;
  std::set<std::uint64_t> ids;
  std::size_t line_number = 0;
  while (!text.empty()) {
    ++line_number;
    std::size_t end = text.find('\n');
    std::string_view line = Trim(text.substr(0, end));
    text = end == std::string_view::npos ? std::string_view{}
                                         : text.substr(end + 1);
    if (line.empty() || line.front() == '#') {
      continue;
    }
    std::size_t comma = line.find(',');
    if (comma == std::string_view::npos) {
      throw InputError(origin, line_number,
                       "expected '<test_id>,<param>=<int>;...'");
    }
    HarnessTest test;
    if (!ParseNumber(Trim(line.substr(0, comma)), test.test_id)) {
      throw InputError(origin, line_number,
                       "invalid test id '" +
                           std::string(line.substr(0, comma)) + "'");
    }
    if (!ids.insert(test.test_id).second) {
      throw InputError(origin, line_number,
                       "duplicate test id " + std::to_string(test.test_id));
    }
    std::string_view assignments = line.substr(comma + 1);
    while (!assignments.empty()) {
      std::size_t semi = assignments.find(';');
      std::string_view item = Trim(assignments.substr(0, semi));
      assignments = semi == std::string_view::npos
                        ? std::string_view{}
                        : assignments.substr(semi + 1);
      if (item.empty()) {
        continue;
      }
      std::size_t eq = item.find('=');
      std::int64_t value = 0;
      std::string name(Trim(item.substr(0, eq)));
      if (eq == std::string_view::npos || name.empty() ||
          !ParseNumber(Trim(item.substr(eq + 1)), value)) {
        throw InputError(origin, line_number,
                         "invalid assignment '" + std::string(item) +
                             "', expected <param>=<int>");
      }
      if (!test.inputs.emplace(name, value).second) {
        throw InputError(origin, line_number,
                         "parameter '" + name + "' assigned twice");
      }
    }
    tests.push_back(std::move(test));
  }
  return tests;
}

std::vector<HarnessTest> LoadTestSuite(const std::filesystem::path& path) {
  return ParseTestSuite(ReadTextFile(path), path.string());
}

void RecordExpectations(const Program& program,
                        std::vector<HarnessTest>& tests,
                        std::size_t step_limit) {
  for (HarnessTest& test : tests) {
    test.expected = Execute(program, test.inputs, step_limit);
  }
}

KillMatrix RunKillMatrix(const Program& program,
                         const std::vector<GeneratedMutant>& mutants,
                         const std::vector<HarnessTest>& tests,
                         const RunOptions& options) {
  for (const HarnessTest& test : tests) {
    ExecutionOutcome original =
        Execute(program, test.inputs, options.step_limit);
    if (!original.SameBehaviour(test.expected)) {
      throw Error("test " + test.Name() + " expects " +
                  test.expected.ToString() + " but the original program gives " +
                  original.ToString());
    }
  }

  std::vector<KillSet> rows(mutants.size(), KillSet(tests.size()));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t m = next++; m < mutants.size(); m = next++) {
      for (std::size_t t = 0; t < tests.size(); ++t) {
        ExecutionOutcome outcome = Execute(mutants[m].mutated, tests[t].inputs,
                                           options.step_limit);
        if (!outcome.SameBehaviour(tests[t].expected)) {
          rows[m].Insert(t);
        }
      }
    }
  };
  unsigned jobs = options.jobs == 0
                      ? std::max(1U, std::thread::hardware_concurrency())
                      : options.jobs;
  jobs = static_cast<unsigned>(
      std::min<std::size_t>(jobs, std::max<std::size_t>(mutants.size(), 1)));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) {
      pool.emplace_back(worker);
    }
  }

  std::vector<MutantRecord> records;
  records.reserve(mutants.size());
  for (const GeneratedMutant& mutant : mutants) {
    MutantRecord record;
    record.id = mutant.mutant_id;
    record.source_path = options.source_path;
    if (!options.mutant_dir.empty()) {
      record.mutant_path = options.mutant_dir + "/mutant_" +
                           std::to_string(mutant.mutant_id) + ".ml";
    }
    record.line_number = mutant.line_number;
    record.operator_tag = std::string(Tag(mutant.edit.op));
    records.push_back(std::move(record));
  }
  std::vector<TestRecord> test_records;
  for (std::size_t t = 0; t < tests.size(); ++t) {
    test_records.push_back({t, tests[t].Name()});
  }
  return KillMatrix(std::move(records), std::move(test_records),
                    std::move(rows));
}

}  // namespace mutsub::minilang
