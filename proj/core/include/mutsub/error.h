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

#ifndef MUTSUB_ERROR_H
#define MUTSUB_ERROR_H

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mutsub {

// Base class for every error raised by the library. Messages are complete
// diagnostics suitable for printing to the user as-is.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& message) : std::runtime_error(message) {}
};

// Malformed external input (CSV, manifest, result files). The message names
// the file and, where applicable, the 1-based line.
class InputError : public Error {
 public:
  InputError(const std::string& file, std::size_t line,
             const std::string& message);
  InputError(const std::string& file, const std::string& message);

  const std::string& file() const { return file_; }
  // 0 when the error is not tied to a particular line.
  std::size_t line() const { return line_; }

 private:
  std::string file_;
  std::size_t line_ = 0;
};

}  // namespace mutsub

#endif  // MUTSUB_ERROR_H
