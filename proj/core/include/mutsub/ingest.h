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

// Reading and writing kill matrices.
//
// Kill-matrix CSV:
//   mutant_id,<test name>,<test name>,...
//   <mutant_id>,<0|1>,<0|1>,...
//
// Manifest CSV (sidecar metadata):
//   mutant_id,source_path,mutant_path,line_number,operator_tag,equivalent
//   where equivalent is `true`, `false` or empty.
//
// Per-mutant results directory:
//   manifest.csv     mutant metadata, defines the mutant order
//   baseline.txt     one test name per line, the full suite
//   mutant_<id>.txt  `FAIL <test>` / `ERROR <test>` for each non-passing test
//
// Fields are split on ',' without quoting, so paths and test names must not
// contain commas or line breaks. Writers emit LF line endings.

#ifndef MUTSUB_INGEST_H
#define MUTSUB_INGEST_H

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "mutsub/kill_matrix.h"

namespace mutsub {

inline constexpr std::string_view kManifestHeader =
    "mutant_id,source_path,mutant_path,line_number,operator_tag,equivalent";
inline constexpr std::string_view kManifestFileName = "manifest.csv";
inline constexpr std::string_view kBaselineFileName = "baseline.txt";

// Parses kill-matrix CSV text. `origin` names the source in diagnostics.
// Without a manifest every mutant gets empty paths, line 1 and no tag.
KillMatrix ParseKillMatrixCsv(
    std::string_view text, const std::string& origin,
    const std::optional<std::map<MutantId, MutantRecord>>& manifest =
        std::nullopt);

// Loads a kill-matrix CSV file, optionally joined with a manifest file. Every
// matrix mutant must appear in the manifest and vice versa.
KillMatrix LoadKillMatrixCsv(
    const std::filesystem::path& path,
    const std::optional<std::filesystem::path>& manifest_path = std::nullopt);

// Keyed by mutant id; iteration order is therefore ascending id, use
// ParseManifestOrdered when file order matters.
std::map<MutantId, MutantRecord> ParseManifest(std::string_view text,
                                               const std::string& origin);
std::vector<MutantRecord> ParseManifestOrdered(std::string_view text,
                                               const std::string& origin);
std::vector<MutantRecord> LoadManifest(const std::filesystem::path& path);

// Loads a per-mutant results directory. Failures and errors both count as
// kills.
KillMatrix LoadPerMutantResults(const std::filesystem::path& dir);

std::string RenderKillMatrixCsv(const KillMatrix& matrix);
std::string RenderManifestCsv(const KillMatrix& matrix);

void WriteKillMatrixCsv(const KillMatrix& matrix,
                        const std::filesystem::path& path);
void WriteManifestCsv(const KillMatrix& matrix,
                      const std::filesystem::path& path);
// Writes the directory layout read by LoadPerMutantResults. Every kill is
// recorded as a FAIL line.
void WritePerMutantResults(const KillMatrix& matrix,
                           const std::filesystem::path& dir);

// Small file helpers shared by the writers. WriteTextFile throws
// mutsub::Error if the file cannot be written.
std::string ReadTextFile(const std::filesystem::path& path);
void WriteTextFile(const std::filesystem::path& path, std::string_view text);

}  // namespace mutsub

#endif  // MUTSUB_INGEST_H
