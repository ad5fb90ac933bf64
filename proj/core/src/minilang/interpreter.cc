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

#include "mutsub/minilang/interpreter.h"

#include <limits>
#include <unordered_map>
#include <utility>

namespace mutsub::minilang {

std::string ExecutionOutcome::ToString() const {
  switch (kind) {
    case Kind::kValue:
      return "value(" + std::to_string(value) + ")";
    case Kind::kRuntimeError:
      return "runtime_error(" + reason + ")";
    case Kind::kStepLimitExceeded:
      return "step_limit_exceeded";
  }
  return "?";
}

namespace {

struct Fault {
  std::string reason;
};
struct OutOfSteps {};

enum class Flow { kNormal, kBreak, kReturn };

std::int64_t Wrap(std::uint64_t bits) { return static_cast<std::int64_t>(bits); }
std::uint64_t Bits(std::int64_t v) { return static_cast<std::uint64_t>(v); }

class Machine {
 public:
  explicit Machine(std::size_t step_limit) : step_limit_(step_limit) {}

  ExecutionOutcome Run(const Function& entry, const Valuation& inputs) {
    for (const std::string& param : entry.params) {
      auto it = inputs.find(param);
      if (it == inputs.end()) {
        return ExecutionOutcome::RuntimeError("missing input for parameter '" +
                                              param + "'");
      }
      locals_[param] = it->second;
    }
    try {
      if (ExecBlock(entry.body) == Flow::kReturn) {
        return ExecutionOutcome::Value(result_);
      }
      return ExecutionOutcome::RuntimeError("function ended without return");
    } catch (const Fault& fault) {
      return ExecutionOutcome::RuntimeError(fault.reason);
    } catch (const OutOfSteps&) {
      return ExecutionOutcome::StepLimitExceeded();
    }
  }

 private:
  void Step() {
    if (++steps_ > step_limit_) {
      throw OutOfSteps{};
    }
  }

  Flow ExecBlock(const std::vector<Stmt>& block) {
    for (const Stmt& s : block) {
      Flow flow = ExecStmt(s);
      if (flow != Flow::kNormal) {
        return flow;
      }
    }
    return Flow::kNormal;
  }

  Flow ExecStmt(const Stmt& s) {
    Step();
    switch (s.kind) {
      case Stmt::Kind::kAssign:
        locals_[s.target] = Eval(s.expr);
        return Flow::kNormal;
      case Stmt::Kind::kIf:
        return ExecBlock(Eval(s.expr) != 0 ? s.body : s.else_body);
      case Stmt::Kind::kWhile:
        // The first guard evaluation is paid for by the statement step.
        for (bool first = true;; first = false) {
          if (!first) {
            Step();
          }
          if (Eval(s.expr) == 0) {
            return Flow::kNormal;
          }
          Flow flow = ExecBlock(s.body);
          if (flow == Flow::kBreak) {
            return Flow::kNormal;
          }
          if (flow == Flow::kReturn) {
            return flow;
          }
        }
      case Stmt::Kind::kBreak:
        return Flow::kBreak;
      case Stmt::Kind::kReturn:
        result_ = Eval(s.expr);
        return Flow::kReturn;
    }
    return Flow::kNormal;
  }

  std::int64_t Eval(const Expr& e) {
    switch (e.kind) {
      case Expr::Kind::kLiteral:
        return e.value;
      case Expr::Kind::kVariable: {
        auto it = locals_.find(e.name);
        if (it == locals_.end()) {
          throw Fault{"read of unassigned variable '" + e.name + "'"};
        }
        return it->second;
      }
      case Expr::Kind::kUnary: {
        std::int64_t v = Eval(e.operands[0]);
        return e.unary_op == UnaryOp::kNeg ? Wrap(0 - Bits(v))
                                           : static_cast<std::int64_t>(v == 0);
      }
      case Expr::Kind::kBinary:
        return EvalBinary(e);
    }
    return 0;
  }

  std::int64_t EvalBinary(const Expr& e) {
    const BinaryOp op = e.binary_op;
    std::int64_t lhs = Eval(e.operands[0]);
    if (op == BinaryOp::kAnd && lhs == 0) {
      return 0;
    }
    if (op == BinaryOp::kOr && lhs != 0) {
      return 1;
    }
    std::int64_t rhs = Eval(e.operands[1]);
    constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();
    switch (op) {
      case BinaryOp::kAdd: return Wrap(Bits(lhs) + Bits(rhs));
      case BinaryOp::kSub: return Wrap(Bits(lhs) - Bits(rhs));
      case BinaryOp::kMul: return Wrap(Bits(lhs) * Bits(rhs));
      case BinaryOp::kDiv:
        if (rhs == 0) {
          throw Fault{"division by zero"};
        }
        return (lhs == kMin && rhs == -1) ? kMin : lhs / rhs;
      case BinaryOp::kMod:
        if (rhs == 0) {
          throw Fault{"modulo by zero"};
        }
        return (lhs == kMin && rhs == -1) ? 0 : lhs % rhs;
      case BinaryOp::kEq: return lhs == rhs;
      case BinaryOp::kNe: return lhs != rhs;
      case BinaryOp::kLt: return lhs < rhs;
      case BinaryOp::kLe: return lhs <= rhs;
      case BinaryOp::kGt: return lhs > rhs;
      case BinaryOp::kGe: return lhs >= rhs;
      case BinaryOp::kAnd:
      case BinaryOp::kOr: return rhs != 0;
    }
    return 0;
  }

  std::size_t step_limit_;
  std::size_t steps_ = 0;
  std::int64_t result_ = 0;
  std::unordered_map<std::string, std::int64_t> locals_;
};

}  // namespace

ExecutionOutcome Execute(const Program& program, const Valuation& inputs,
                         std::size_t step_limit) {
  if (program.functions.empty()) {
    return ExecutionOutcome::RuntimeError("program has no functions");
  }
  return Machine(step_limit).Run(program.Entry(), inputs);
}

}  // namespace mutsub::minilang
