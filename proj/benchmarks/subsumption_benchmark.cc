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


#include <cstdint>
#include <random>
#include <vector>

#include "benchmark/benchmark.h"
#include "mutsub/kill_matrix.h"
#include "mutsub/minilang/harness.h"
#include "mutsub/minilang/mutator.h"
#include "mutsub/minilang/worked_example.h"
#include "mutsub/minilang/parser.h"
#include "mutsub/subsumption.h"

namespace mutsub {
namespace {

// Rows are drawn from a small pool of kill patterns so groups have several
// members, like real mutant populations.
KillMatrix RandomMatrix(std::size_t mutants, std::size_t tests,
                        std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution bit(0.3);
  std::vector<std::vector<bool>> pool(std::max<std::size_t>(mutants / 4, 1),
                                      std::vector<bool>(tests));
  for (auto& row : pool) {
    for (std::size_t t = 0; t < tests; ++t) {
      row[t] = bit(rng);
    }
  }
  std::vector<MutantRecord> records(mutants);
  std::vector<std::vector<bool>> cells;
  for (std::size_t i = 0; i < mutants; ++i) {
    records[i].id = i;
    cells.push_back(pool[rng() % pool.size()]);
  }
  std::vector<TestRecord> test_records;
  for (std::size_t t = 0; t < tests; ++t) {
    test_records.push_back({t, "t" + std::to_string(t)});
  }
  return KillMatrix::FromCells(std::move(records), std::move(test_records),
                               cells);
}

void BM_GroupMutants(benchmark::State& state) {
  KillMatrix m = RandomMatrix(static_cast<std::size_t>(state.range(0)),
                              static_cast<std::size_t>(state.range(1)), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(GroupMutants(m));
  }
}
BENCHMARK(BM_GroupMutants)->Args({160, 32})->Args({1000, 64})->Args({5000, 256});

void BM_BuildDmsg(benchmark::State& state) {
  KillMatrix m = RandomMatrix(static_cast<std::size_t>(state.range(0)),
                              static_cast<std::size_t>(state.range(1)), 2);
  std::vector<SubsumptionGroup> groups = GroupMutants(m);
  state.counters["groups"] = static_cast<double>(groups.size());
  for (auto _ : state) {
    benchmark::DoNotOptimize(BuildDmsg(groups));
  }
}
BENCHMARK(BM_BuildDmsg)->Args({160, 32})->Args({1000, 64})->Args({5000, 256});

void BM_FilterRedundant(benchmark::State& state) {
  KillMatrix m = RandomMatrix(static_cast<std::size_t>(state.range(0)), 64, 3);
  Dmsg dmsg = BuildDmsg(GroupMutants(m));
  for (auto _ : state) {
    benchmark::DoNotOptimize(FilterRedundant(m, dmsg));
  }
}
BENCHMARK(BM_FilterRedundant)->Arg(1000);

void BM_RunKillMatrixMultiply(benchmark::State& state) {
  using namespace minilang;
  Program program = ParseProgram(kMultiplySource);
  std::vector<GeneratedMutant> mutants =
      GenerateMutants(program, AllOperators());
  std::vector<HarnessTest> tests = WorkedExampleTests();
  RunOptions options;
  options.jobs = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(RunKillMatrix(program, mutants, tests, options));
  }
}
BENCHMARK(BM_RunKillMatrixMultiply)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace mutsub

BENCHMARK_MAIN();
