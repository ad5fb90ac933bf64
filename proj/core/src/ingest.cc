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

#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "mutsub/error.h"

namespace mutsub {

namespace {

struct Line {
  std::size_t number;
  std::string_view text;
};

// Splits on LF, tolerating a trailing CR. Blank lines are dropped.
std::vector<Line> SplitLines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    std::size_t end = text.find('\n');
    std::string_view line = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{}
                                         : text.substr(end + 1);
    if (!line.empty() && line.back() == '\r') {
      line.remove_suffix(1);
    }
    if (!line.empty()) {
      lines.push_back({number, line});
    }
  }
  return lines;
}

std::vector<std::string_view> SplitFields(std::string_view line) {
  std::vector<std::string_view> fields;
  while (true) {
    std::size_t comma = line.find(',');
    fields.push_back(line.substr(0, comma));
    if (comma == std::string_view::npos) {
      break;
    }
    line = line.substr(comma + 1);
  }
  return fields;
}

template <typename T>
std::optional<T> ParseUnsigned(std::string_view text) {
  T value{};
  if (text.empty()) {
    return std::nullopt;
  }
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(),
                                   value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    return std::nullopt;
  }
  return value;
}

MutantRecord DefaultRecord(MutantId id) {
  MutantRecord record;
  record.id = id;
  return record;
}

std::string Quoted(std::string_view text) {
  return "'" + std::string(text) + "'";
}

}  // namespace

std::string ReadTextFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw InputError(path.string(), "cannot open file for reading");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteTextFile(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(path.string() + ": cannot open file for writing");
  }
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) {
    throw Error(path.string() + ": write failed");
  }
}

std::vector<MutantRecord> ParseManifestOrdered(std::string_view text,
                                               const std::string& origin) {
  std::vector<Line> lines = SplitLines(text);
  if (lines.empty() || lines.front().text != kManifestHeader) {
    throw InputError(origin, lines.empty() ? 1 : lines.front().number,
                     "malformed manifest header, expected '" +
                         std::string(kManifestHeader) + "'");
  }
  std::vector<MutantRecord> records;
  std::unordered_set<MutantId> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    std::vector<std::string_view> fields = SplitFields(line.text);
    if (fields.size() != 6) {
      throw InputError(origin, line.number,
                       "expected 6 fields, found " +
                           std::to_string(fields.size()));
    }
    auto id = ParseUnsigned<MutantId>(fields[0]);
    if (!id) {
      throw InputError(origin, line.number,
                       "invalid mutant id " + Quoted(fields[0]));
    }
    if (!seen.insert(*id).second) {
      throw InputError(origin, line.number,
                       "duplicate mutant id " + std::to_string(*id));
    }
    auto line_number = ParseUnsigned<std::size_t>(fields[3]);
    if (!line_number || *line_number == 0) {
      throw InputError(origin, line.number,
                       "invalid line number " + Quoted(fields[3]) +
                           " (must be a positive integer)");
    }
    MutantRecord record;
    record.id = *id;
    record.source_path = std::string(fields[1]);
    record.mutant_path = std::string(fields[2]);
    record.line_number = *line_number;
    record.operator_tag = std::string(fields[4]);
    if (fields[5] == "true") {
      record.equivalence_annotation = true;
    } else if (fields[5] == "false") {
      record.equivalence_annotation = false;
    } else if (!fields[5].empty()) {
      throw InputError(origin, line.number,
                       "equivalent must be 'true', 'false' or empty, found " +
                           Quoted(fields[5]));
    }
    records.push_back(std::move(record));
  }
  return records;
}

std::map<MutantId, MutantRecord> ParseManifest(std::string_view text,
                                               const std::string& origin) {
  std::map<MutantId, MutantRecord> by_id;
  for (MutantRecord& record : ParseManifestOrdered(text, origin)) {
    MutantId id = record.id;
    by_id.emplace(id, std::move(record));
  }
  return by_id;
}

std::vector<MutantRecord> LoadManifest(const std::filesystem::path& path) {
  return ParseManifestOrdered(ReadTextFile(path), path.string());
}

KillMatrix ParseKillMatrixCsv(
    std::string_view text, const std::string& origin,
    const std::optional<std::map<MutantId, MutantRecord>>& manifest) {
  std::vector<Line> lines = SplitLines(text);
  if (lines.empty()) {
    throw InputError(origin, 1, "malformed header: file is empty");
  }
  std::vector<std::string_view> header = SplitFields(lines.front().text);
  if (header.front() != "mutant_id") {
    throw InputError(origin, lines.front().number,
                     "malformed header: first column must be 'mutant_id', "
                     "found " + Quoted(header.front()));
  }
  std::vector<TestRecord> tests;
  std::unordered_set<std::string_view> test_names;
  for (std::size_t c = 1; c < header.size(); ++c) {
    if (header[c].empty()) {
      throw InputError(origin, lines.front().number,
                       "malformed header: empty test name in column " +
                           std::to_string(c + 1));
    }
    if (!test_names.insert(header[c]).second) {
      throw InputError(origin, lines.front().number,
                       "duplicate test name " + Quoted(header[c]));
    }
    tests.push_back({c - 1, std::string(header[c])});
  }

  std::vector<MutantRecord> mutants;
  std::vector<KillSet> rows;
  std::unordered_set<MutantId> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    std::vector<std::string_view> fields = SplitFields(line.text);
    if (fields.size() != header.size()) {
      throw InputError(origin, line.number,
                       "ragged row: expected " +
                           std::to_string(header.size()) +
                           " fields, found " + std::to_string(fields.size()));
    }
    auto id = ParseUnsigned<MutantId>(fields[0]);
    if (!id) {
      throw InputError(origin, line.number,
                       "invalid mutant id " + Quoted(fields[0]));
    }
    if (!seen.insert(*id).second) {
      throw InputError(origin, line.number,
                       "duplicate mutant id " + std::to_string(*id));
    }
    KillSet row(tests.size());
    for (std::size_t c = 1; c < fields.size(); ++c) {
      if (fields[c] == "1") {
        row.Insert(c - 1);
      } else if (fields[c] != "0") {
        throw InputError(origin, line.number,
                         "cell value " + Quoted(fields[c]) + " for test " +
                             Quoted(header[c]) + " is not 0 or 1");
      }
    }
    if (manifest) {
      auto it = manifest->find(*id);
      if (it == manifest->end()) {
        throw InputError(origin, line.number,
                         "mutant " + std::to_string(*id) +
                             " missing from manifest");
      }
      mutants.push_back(it->second);
    } else {
      mutants.push_back(DefaultRecord(*id));
    }
    rows.push_back(std::move(row));
  }
  if (manifest) {
    for (const auto& [id, record] : *manifest) {
      if (!seen.contains(id)) {
        throw InputError(origin, "manifest lists mutant " +
                                     std::to_string(id) +
                                     " which is absent from the matrix");
      }
    }
  }
  return KillMatrix(std::move(mutants), std::move(tests), std::move(rows));
}

KillMatrix LoadKillMatrixCsv(
    const std::filesystem::path& path,
    const std::optional<std::filesystem::path>& manifest_path) {
  std::optional<std::map<MutantId, MutantRecord>> manifest;
  if (manifest_path) {
    manifest = ParseManifest(ReadTextFile(*manifest_path),
                             manifest_path->string());
  }
  return ParseKillMatrixCsv(ReadTextFile(path), path.string(), manifest);
}

KillMatrix LoadPerMutantResults(const std::filesystem::path& dir) {
  const std::filesystem::path manifest_path = dir / kManifestFileName;
  if (!std::filesystem::is_regular_file(manifest_path)) {
    throw InputError(manifest_path.string(), "missing manifest");
  }
  std::vector<MutantRecord> mutants = LoadManifest(manifest_path);

  const std::filesystem::path baseline_path = dir / kBaselineFileName;
  std::string baseline_text = ReadTextFile(baseline_path);
  std::vector<TestRecord> tests;
  std::unordered_map<std::string, TestId> by_name;
  for (const Line& line : SplitLines(baseline_text)) {
    std::string name(line.text);
    if (!by_name.emplace(name, tests.size()).second) {
      throw InputError(baseline_path.string(), line.number,
                       "duplicate test name " + Quoted(name));
    }
    tests.push_back({tests.size(), std::move(name)});
  }

  std::vector<KillSet> rows;
  rows.reserve(mutants.size());
  for (const MutantRecord& mutant : mutants) {
    const std::filesystem::path result_path =
        dir / ("mutant_" + std::to_string(mutant.id) + ".txt");
    if (!std::filesystem::is_regular_file(result_path)) {
      throw InputError(result_path.string(),
                       "unreadable result entry for mutant " +
                           std::to_string(mutant.id));
    }
    std::string text = ReadTextFile(result_path);
    KillSet row(tests.size());
    for (const Line& line : SplitLines(text)) {
      std::string_view body = line.text;
      std::string_view name;
      if (body.starts_with("FAIL ")) {
        name = body.substr(5);
      } else if (body.starts_with("ERROR ")) {
        name = body.substr(6);
      } else {
        throw InputError(result_path.string(), line.number,
                         "expected 'FAIL <test>' or 'ERROR <test>', found " +
                             Quoted(body));
      }
      auto it = by_name.find(std::string(name));
      if (it == by_name.end()) {
        throw InputError(result_path.string(), line.number,
                         "mutant " + std::to_string(mutant.id) +
                             " names test " + Quoted(name) +
                             " which is not in the baseline");
      }
      row.Insert(it->second);
    }
    rows.push_back(std::move(row));
  }
  return KillMatrix(std::move(mutants), std::move(tests), std::move(rows));
}

std::string RenderKillMatrixCsv(const KillMatrix& matrix) {
  std::string out = "mutant_id";
  for (const TestRecord& test : matrix.tests()) {
    out += ',';
    out += test.name;
  }
  out += '\n';
  for (std::size_t i = 0; i < matrix.MutantCount(); ++i) {
    out += std::to_string(matrix.mutants()[i].id);
    for (TestId t = 0; t < matrix.TestCount(); ++t) {
      out += matrix.Cell(i, t) ? ",1" : ",0";
    }
    out += '\n';
  }
  return out;
}

std::string RenderManifestCsv(const KillMatrix& matrix) {
  std::string out(kManifestHeader);
  out += '\n';
  for (const MutantRecord& m : matrix.mutants()) {
    out += std::to_string(m.id) + ',' + m.source_path + ',' + m.mutant_path +
           ',' + std::to_string(m.line_number) + ',' + m.operator_tag + ',';
    if (m.equivalence_annotation) {
      out += *m.equivalence_annotation ? "true" : "false";
    }
    out += '\n';
  }
  return out;
}

void WriteKillMatrixCsv(const KillMatrix& matrix,
                        const std::filesystem::path& path) {
  WriteTextFile(path, RenderKillMatrixCsv(matrix));
}

void WriteManifestCsv(const KillMatrix& matrix,
                      const std::filesystem::path& path) {
  WriteTextFile(path, RenderManifestCsv(matrix));
}

void WritePerMutantResults(const KillMatrix& matrix,
                           const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  WriteManifestCsv(matrix, dir / kManifestFileName);
  std::string baseline;
  for (const TestRecord& test : matrix.tests()) {
    baseline += test.name + '\n';
  }
  WriteTextFile(dir / kBaselineFileName, baseline);
  for (std::size_t i = 0; i < matrix.MutantCount(); ++i) {
    std::string result;
    for (TestId t : matrix.Row(i).TestIds()) {
      result += "FAIL " + matrix.tests()[t].name + '\n';
    }
    WriteTextFile(
        dir / ("mutant_" + std::to_string(matrix.mutants()[i].id) + ".txt"),
        result);
  }
}

}  // namespace mutsub
