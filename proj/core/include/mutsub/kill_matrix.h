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

#ifndef MUTSUB_KILL_MATRIX_H
#define MUTSUB_KILL_MATRIX_H

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace mutsub {

// External, user-visible mutant identifier. Preserved verbatim from input.
using MutantId = std::uint64_t;

// Tests are identified by their dense 0-based column in the kill matrix.
using TestId = std::size_t;

struct MutantRecord {
  MutantId id = 0;
  std::string source_path;
  std::string mutant_path;
  std::size_t line_number = 1;
  std::string operator_tag;
  // Set only when the mutant has been externally asserted (non-)equivalent.
  std::optional<bool> equivalence_annotation;

  bool AnnotatedEquivalent() const {
    return equivalence_annotation.value_or(false);
  }

  friend bool operator==(const MutantRecord&, const MutantRecord&) = default;
};

struct TestRecord {
  TestId id = 0;
  std::string name;

  friend bool operator==(const TestRecord&, const TestRecord&) = default;
};

// The set of tests that kill a mutant, stored as a bitset over the test
// columns of the owning matrix. Two kill sets are only comparable when they
// share a universe (same number of tests).
class KillSet {
 public:
  KillSet() = default;
  explicit KillSet(std::size_t universe);

  void Insert(TestId test);
  bool Contains(TestId test) const;

  std::size_t Count() const;
  bool Empty() const;
  std::size_t Universe() const { return universe_; }

  bool IsSubsetOf(const KillSet& other) const;
  bool IsStrictSubsetOf(const KillSet& other) const;

  // Ascending.
  std::vector<TestId> TestIds() const;

  friend bool operator==(const KillSet&, const KillSet&) = default;
  friend std::strong_ordering operator<=>(const KillSet&,
                                          const KillSet&) = default;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

// Boolean mutant x test outcome table. Immutable once constructed; every
// accessor is const and safe for concurrent readers.
class KillMatrix {
 public:
  KillMatrix() = default;

  // rows[i] is the kill set of mutants[i] and must have universe
  // tests.size(). Throws mutsub::Error on any invariant violation: duplicate
  // mutant id, duplicate test name, test id != column, line_number == 0,
  // or mismatched row count/width.
  KillMatrix(std::vector<MutantRecord> mutants, std::vector<TestRecord> tests,
             std::vector<KillSet> rows);

  // Convenience constructor from a dense boolean table.
  static KillMatrix FromCells(std::vector<MutantRecord> mutants,
                              std::vector<TestRecord> tests,
                              const std::vector<std::vector<bool>>& cells);

  const std::vector<MutantRecord>& mutants() const { return mutants_; }
  const std::vector<TestRecord>& tests() const { return tests_; }
  std::size_t MutantCount() const { return mutants_.size(); }
  std::size_t TestCount() const { return tests_.size(); }

  const KillSet& Row(std::size_t mutant_index) const {
    return rows_[mutant_index];
  }
  bool Cell(std::size_t mutant_index, TestId test) const {
    return rows_[mutant_index].Contains(test);
  }
  bool IsKilled(std::size_t mutant_index) const {
    return !rows_[mutant_index].Empty();
  }

  std::optional<std::size_t> FindMutant(MutantId id) const;
  // Throws mutsub::Error for an unknown id.
  std::size_t IndexOf(MutantId id) const;
  const MutantRecord& Mutant(MutantId id) const {
    return mutants_[IndexOf(id)];
  }

  std::size_t KilledCount() const;

  friend bool operator==(const KillMatrix& a, const KillMatrix& b) {
    return a.mutants_ == b.mutants_ && a.tests_ == b.tests_ &&
           a.rows_ == b.rows_;
  }

 private:
  std::vector<MutantRecord> mutants_;
  std::vector<TestRecord> tests_;
  std::vector<KillSet> rows_;
  std::unordered_map<MutantId, std::size_t> index_;
};

// The tests whose cell is true for `mutant`. Throws on an unknown id.
KillSet Killers(const KillMatrix& matrix, MutantId mutant);

// Killed mutants over non-equivalent mutants. Mutants annotated equivalent
// are excluded from numerator and denominator alike. Throws mutsub::Error
// when no mutant remains in the denominator.
double MutationCoverage(const KillMatrix& matrix);

// Killed mutants over all mutants, ignoring annotations. Throws on an empty
// matrix.
double RawMutationCoverage(const KillMatrix& matrix);

}  // namespace mutsub

#endif  // MUTSUB_KILL_MATRIX_H
