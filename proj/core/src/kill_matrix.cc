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

#include "mutsub/kill_matrix.h"

#include <bit>
#include <unordered_set>
#include <utility>

#include "mutsub/error.h"

namespace mutsub {

namespace {

constexpr std::size_t kWordBits = 64;

}  // namespace

KillSet::KillSet(std::size_t universe)
    : universe_(universe), words_((universe + kWordBits - 1) / kWordBits, 0) {}

void KillSet::Insert(TestId test) {
  if (test >= universe_) {
    throw Error("test id " + std::to_string(test) +
                " outside kill set universe of " + std::to_string(universe_));
  }
  words_[test / kWordBits] |= std::uint64_t{1} << (test % kWordBits);
}

bool KillSet::Contains(TestId test) const {
  if (test >= universe_) {
    return false;
  }
  return ((words_[test / kWordBits] >> (test % kWordBits)) & 1U) != 0;
}

std::size_t KillSet::Count() const {
  std::size_t count = 0;
  for (std::uint64_t word : words_) {
    count += static_cast<std::size_t>(std::popcount(word));
  }
  return count;
}

bool KillSet::Empty() const {
  for (std::uint64_t word : words_) {
    if (word != 0) {
      return false;
    }
  }
  return true;
}

bool KillSet::IsSubsetOf(const KillSet& other) const {
  if (universe_ != other.universe_) {
    throw Error("comparing kill sets over different test universes");
  }
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) {
      return false;
    }
  }
  return true;
}

bool KillSet::IsStrictSubsetOf(const KillSet& other) const {
  return IsSubsetOf(other) && words_ != other.words_;
}

std::vector<TestId> KillSet::TestIds() const {
  std::vector<TestId> ids;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t word = words_[w];
    while (word != 0) {
      ids.push_back(w * kWordBits +
                    static_cast<std::size_t>(std::countr_zero(word)));
      word &= word - 1;
    }
  }
  return ids;
}

KillMatrix::KillMatrix(std::vector<MutantRecord> mutants,
                       std::vector<TestRecord> tests,
                       std::vector<KillSet> rows)
    : mutants_(std::move(mutants)),
      tests_(std::move(tests)),
      rows_(std::move(rows)) {
  if (rows_.size() != mutants_.size()) {
    throw Error("kill matrix has " + std::to_string(rows_.size()) +
                " rows for " + std::to_string(mutants_.size()) + " mutants");
  }
  std::unordered_set<std::string> names;
  for (std::size_t i = 0; i < tests_.size(); ++i) {
    if (tests_[i].id != i) {
      throw Error("test '" + tests_[i].name + "' has id " +
                  std::to_string(tests_[i].id) + " but occupies column " +
                  std::to_string(i));
    }
    if (!names.insert(tests_[i].name).second) {
      throw Error("duplicate test name '" + tests_[i].name + "'");
    }
  }
  index_.reserve(mutants_.size());
  for (std::size_t i = 0; i < mutants_.size(); ++i) {
    const MutantRecord& mutant = mutants_[i];
    if (!index_.emplace(mutant.id, i).second) {
      throw Error("duplicate mutant id " + std::to_string(mutant.id));
    }
    if (mutant.line_number == 0) {
      throw Error("mutant " + std::to_string(mutant.id) +
                  " has line number 0 (must be >= 1)");
    }
    if (rows_[i].Universe() != tests_.size()) {
      throw Error("row of mutant " + std::to_string(mutant.id) + " spans " +
                  std::to_string(rows_[i].Universe()) + " tests, expected " +
                  std::to_string(tests_.size()));
    }
  }
}

KillMatrix KillMatrix::FromCells(std::vector<MutantRecord> mutants,
                                 std::vector<TestRecord> tests,
                                 const std::vector<std::vector<bool>>& cells) {
  std::vector<KillSet> rows;
  rows.reserve(cells.size());
  for (const auto& cell_row : cells) {
    if (cell_row.size() != tests.size()) {
      throw Error("ragged cell row: " + std::to_string(cell_row.size()) +
                  " cells for " + std::to_string(tests.size()) + " tests");
    }
    KillSet row(tests.size());
    for (std::size_t t = 0; t < cell_row.size(); ++t) {
      if (cell_row[t]) {
        row.Insert(t);
      }
    }
    rows.push_back(std::move(row));
  }
  return KillMatrix(std::move(mutants), std::move(tests), std::move(rows));
}

std::optional<std::size_t> KillMatrix::FindMutant(MutantId id) const {
  auto it = index_.find(id);
  if (it == index_.end()) {
    return std::nullopt;
  }
  return it->second;
}

std::size_t KillMatrix::IndexOf(MutantId id) const {
  auto index = FindMutant(id);
  if (!index) {
    throw Error("unknown mutant id " + std::to_string(id));
  }
  return *index;
}

std::size_t KillMatrix::KilledCount() const {
  std::size_t killed = 0;
  for (const KillSet& row : rows_) {
    killed += row.Empty() ? 0 : 1;
  }
  return killed;
}

KillSet Killers(const KillMatrix& matrix, MutantId mutant) {
  return matrix.Row(matrix.IndexOf(mutant));
}

double MutationCoverage(const KillMatrix& matrix) {
  std::size_t killed = 0;
  std::size_t non_equivalent = 0;
  for (std::size_t i = 0; i < matrix.MutantCount(); ++i) {
    if (matrix.mutants()[i].AnnotatedEquivalent()) {
      continue;
    }
    ++non_equivalent;
    killed += matrix.IsKilled(i) ? 1 : 0;
  }
  if (non_equivalent == 0) {
    throw Error(
        "mutation coverage is undefined: no non-equivalent mutants in matrix");
  }
  return static_cast<double>(killed) / static_cast<double>(non_equivalent);
}

double RawMutationCoverage(const KillMatrix& matrix) {
  if (matrix.MutantCount() == 0) {
    throw Error("mutation coverage is undefined: matrix has no mutants");
  }
  return static_cast<double>(matrix.KilledCount()) /
         static_cast<double>(matrix.MutantCount());
}

}  // namespace mutsub
