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

#ifndef MUTSUB_MINILANG_INTERPRETER_H
#define MUTSUB_MINILANG_INTERPRETER_H

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>

#include "mutsub/minilang/ast.h"

namespace mutsub::minilang {

inline constexpr std::size_t kDefaultStepLimit = 100000;

// Parameter name -> value.
using Valuation = std::map<std::string, std::int64_t>;

struct ExecutionOutcome {
  enum class Kind { kValue, kRuntimeError, kStepLimitExceeded };

  Kind kind = Kind::kValue;
  std::int64_t value = 0;  // kValue only
  std::string reason;      // kRuntimeError only

  static ExecutionOutcome Value(std::int64_t v) { return {Kind::kValue, v, {}}; }
  static ExecutionOutcome RuntimeError(std::string why) {
    return {Kind::kRuntimeError, 0, std::move(why)};
  }
  static ExecutionOutcome StepLimitExceeded() {
    return {Kind::kStepLimitExceeded, 0, {}};
  }

  // Observable behaviour used for kill decisions: kind, and value for value
  // outcomes. Error reasons are diagnostic only.
  bool SameBehaviour(const ExecutionOutcome& other) const {
    return kind == other.kind && (kind != Kind::kValue || value == other.value);
  }

  std::string ToString() const;

  friend bool operator==(const ExecutionOutcome&,
                         const ExecutionOutcome&) = default;
};

// Runs the entry function of `program` on `inputs`. Every executed statement
// and every loop-guard evaluation costs one step; exceeding `step_limit`
// yields kStepLimitExceeded. Integer arithmetic wraps (64-bit two's
// complement). Division or modulo by zero, reading an unassigned variable,
// a missing input, or falling off the end of the function yield
// kRuntimeError. Pure: the result depends only on the arguments.
ExecutionOutcome Execute(const Program& program, const Valuation& inputs,
                         std::size_t step_limit = kDefaultStepLimit);

}  // namespace mutsub::minilang

#endif  // MUTSUB_MINILANG_INTERPRETER_H
