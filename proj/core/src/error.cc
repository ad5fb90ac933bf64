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

#include "mutsub/error.h"

namespace mutsub {

InputError::InputError(const std::string& file, std::size_t line,
                       const std::string& message)
    : Error(file + ":" + std::to_string(line) + ": " + message),
      file_(file),
      line_(line) {}

InputError::InputError(const std::string& file, const std::string& message)
    : Error(file + ": " + message), file_(file) {}

}  // namespace mutsub
