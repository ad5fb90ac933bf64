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

#include "mutsub/ingest.h"

#include <filesystem>
#include <random>
#include <string>

#include "gtest/gtest.h"
#include "mutsub/error.h"
#include "mutsub/minilang/worked_example.h"
#include "testing/oracle.h"

namespace mutsub {
namespace {

namespace fs = std::filesystem;

const fs::path kData = MUTSUB_TEST_DATA_DIR;

// Fresh scratch directory under the test working directory.
fs::path Scratch(const std::string& name) {
  fs::path dir = fs::current_path() / "ingest_test_scratch" / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

// Runs `fn`, expecting an InputError whose line() is `line`.
template <typename Fn>
std::string ExpectInputError(Fn fn, std::size_t line) {
  try {
    fn();
  } catch (const InputError& e) {
    EXPECT_EQ(e.line(), line) << e.what();
    return e.what();
  }
  ADD_FAILURE() << "expected InputError";
  return "";
}

TEST(LoadKillMatrixCsvTest, ThreeByTwo) {
  KillMatrix m = ParseKillMatrixCsv("mutant_id,tA,tB\n0,1,0\n1,0,0\n2,1,1\n",
                                    "inline");
  ASSERT_EQ(m.MutantCount(), 3u);
  ASSERT_EQ(m.TestCount(), 2u);
  EXPECT_EQ(m.tests()[0].name, "tA");
  EXPECT_EQ(Killers(m, 0).TestIds(), (std::vector<TestId>{0}));
  EXPECT_FALSE(m.IsKilled(1));
  EXPECT_EQ(Killers(m, 2).TestIds(), (std::vector<TestId>{0, 1}));
}

TEST(LoadKillMatrixCsvTest, HeaderOnly) {
  KillMatrix m = ParseKillMatrixCsv("mutant_id,tA,tB\n", "inline");
  EXPECT_EQ(m.MutantCount(), 0u);
  EXPECT_EQ(m.TestCount(), 2u);
}

TEST(LoadKillMatrixCsvTest, PreservesFileOrder) {
  KillMatrix m = ParseKillMatrixCsv("mutant_id,z,a\n9,1,0\n3,0,1\n", "x");
  EXPECT_EQ(m.mutants()[0].id, 9u);
  EXPECT_EQ(m.mutants()[1].id, 3u);
  EXPECT_EQ(m.tests()[0].name, "z");
}

TEST(LoadKillMatrixCsvTest, CellOutOfDomainNamesLine) {
  std::string message = ExpectInputError(
      [] { ParseKillMatrixCsv("mutant_id,tA\n0,1\n1,2\n", "m.csv"); }, 3);
  EXPECT_NE(message.find("m.csv:3"), std::string::npos);
  EXPECT_NE(message.find("'2'"), std::string::npos);
}

TEST(LoadKillMatrixCsvTest, Malformed) {
  ExpectInputError([] { ParseKillMatrixCsv("", "m"); }, 1);
  ExpectInputError([] { ParseKillMatrixCsv("id,tA\n0,1\n", "m"); }, 1);
  ExpectInputError([] { ParseKillMatrixCsv("mutant_id,tA,tA\n", "m"); }, 1);
  ExpectInputError([] { ParseKillMatrixCsv("mutant_id,tA,\n", "m"); }, 1);
  ExpectInputError(
      [] { ParseKillMatrixCsv("mutant_id,tA\n0,1\n0,0\n", "m"); }, 3);
  ExpectInputError(
      [] { ParseKillMatrixCsv("mutant_id,tA,tB\n0,1\n", "m"); }, 2);
  ExpectInputError(
      [] { ParseKillMatrixCsv("mutant_id,tA\n-1,1\n", "m"); }, 2);
}

TEST(LoadKillMatrixCsvTest, ManifestJoin) {
  auto manifest = ParseManifest(
      "mutant_id,source_path,mutant_path,line_number,operator_tag,equivalent\n"
      "0,src/A.ml,m/0.ml,12,AOR,true\n"
      "1,src/A.ml,m/1.ml,3,ROR,\n",
      "manifest");
  KillMatrix m =
      ParseKillMatrixCsv("mutant_id,tA\n1,1\n0,0\n", "matrix", manifest);
  const MutantRecord& zero = m.Mutant(0);
  EXPECT_EQ(zero.line_number, 12u);
  EXPECT_EQ(zero.operator_tag, "AOR");
  EXPECT_EQ(zero.equivalence_annotation, std::optional<bool>(true));
  EXPECT_FALSE(m.Mutant(1).equivalence_annotation.has_value());

  EXPECT_THROW(ParseKillMatrixCsv("mutant_id,tA\n1,1\n", "matrix", manifest),
               InputError);
  EXPECT_THROW(
      ParseKillMatrixCsv("mutant_id,tA\n0,1\n1,1\n2,0\n", "matrix", manifest),
      InputError);
}

TEST(ManifestTest, RejectsBadRows) {
  const std::string header(kManifestHeader);
  ExpectInputError([] { ParseManifest("mutant_id,source\n", "m"); }, 1);
  ExpectInputError(
      [&] { ParseManifest(header + "\n0,a,b,0,AOR,\n", "m"); }, 2);
  ExpectInputError(
      [&] { ParseManifest(header + "\n0,a,b,1,AOR,maybe\n", "m"); }, 2);
  ExpectInputError(
      [&] { ParseManifest(header + "\n0,a,b,1,AOR,\n0,a,b,1,AOR,\n", "m"); },
      3);
  ExpectInputError([&] { ParseManifest(header + "\n0,a,b,1\n", "m"); }, 2);
}

void WriteResultsFixture(const fs::path& dir, const std::string& mutant7) {
  WriteTextFile(dir / "manifest.csv",
                std::string(kManifestHeader) + "\n7,A.ml,m7.ml,4,AOR,\n");
  WriteTextFile(dir / "baseline.txt", "tA\ntB\ntC\n");
  WriteTextFile(dir / "mutant_7.txt", mutant7);
}

TEST(LoadPerMutantResultsTest, FailuresAndErrorsBothKill) {
  fs::path dir = Scratch("fail_and_error");
  WriteResultsFixture(dir, "FAIL tA\nERROR tC\n");
  KillMatrix m = LoadPerMutantResults(dir);
  ASSERT_EQ(m.TestCount(), 3u);
  EXPECT_TRUE(m.Cell(0, 0));
  EXPECT_FALSE(m.Cell(0, 1));
  EXPECT_TRUE(m.Cell(0, 2));
  EXPECT_EQ(m.Mutant(7).line_number, 4u);
}

TEST(LoadPerMutantResultsTest, EmptyResultFileMeansSurvived) {
  fs::path dir = Scratch("survived");
  WriteResultsFixture(dir, "");
  KillMatrix m = LoadPerMutantResults(dir);
  EXPECT_FALSE(m.IsKilled(0));
}

TEST(LoadPerMutantResultsTest, UnknownTestNamesMutantAndTest) {
  fs::path dir = Scratch("unknown_test");
  WriteResultsFixture(dir, "FAIL tA\nFAIL tZ\n");
  std::string message =
      ExpectInputError([&] { LoadPerMutantResults(dir); }, 2);
  EXPECT_NE(message.find("mutant 7"), std::string::npos);
  EXPECT_NE(message.find("'tZ'"), std::string::npos);
}

TEST(LoadPerMutantResultsTest, MissingPieces) {
  fs::path dir = Scratch("missing");
  EXPECT_THROW(LoadPerMutantResults(dir), InputError);  // no manifest

  WriteResultsFixture(dir, "FAIL tA\n");
  fs::remove(dir / "mutant_7.txt");
  EXPECT_THROW(LoadPerMutantResults(dir), InputError);

  WriteResultsFixture(dir, "PASS tA\n");
  EXPECT_THROW(LoadPerMutantResults(dir), InputError);
}

TEST(IngestTest, GoldenPairFixturesAgree) {
  fs::path fixture = kData / "fixtures" / "worked_example";
  KillMatrix from_csv = LoadKillMatrixCsv(fixture / "matrix.csv",
                                          fixture / "manifest.csv");
  KillMatrix from_results = LoadPerMutantResults(fixture / "results");
  EXPECT_EQ(from_csv, from_results);
  EXPECT_EQ(from_csv, minilang::WorkedExampleMatrix());
}

TEST(IngestPropertyTest, CsvRoundTrip) {
  std::mt19937_64 rng(21);
  for (int iteration = 0; iteration < 50; ++iteration) {
    testing::RandomCase rc = testing::MakeRandomCase(rng, 16, 8);
    KillMatrix original = rc.ToMatrix();
    KillMatrix reloaded =
        ParseKillMatrixCsv(RenderKillMatrixCsv(original), "roundtrip",
                           ParseManifest(RenderManifestCsv(original), "m"));
    EXPECT_EQ(original, reloaded);
  }
}

TEST(IngestPropertyTest, ResultsDirectoryRoundTrip) {
  std::mt19937_64 rng(22);
  for (int iteration = 0; iteration < 10; ++iteration) {
    testing::RandomCase rc = testing::MakeRandomCase(rng, 12, 6);
    KillMatrix original = rc.ToMatrix();
    fs::path dir = Scratch("results_roundtrip");
    WritePerMutantResults(original, dir);
    EXPECT_EQ(original, LoadPerMutantResults(dir));
  }
}

}  // namespace
}  // namespace mutsub
