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

#include "mutsub/minilang/ast.h"

#include <utility>

namespace mutsub::minilang {

std::string_view Spelling(UnaryOp op) {
  return op == UnaryOp::kNeg ? "-" : "!";
}

std::string_view Spelling(BinaryOp op) {
  switch (op) {
    case BinaryOp::kAdd: return "+";
    case BinaryOp::kSub: return "-";
    case BinaryOp::kMul: return "*";
    case BinaryOp::kDiv: return "/";
    case BinaryOp::kMod: return "%";
    case BinaryOp::kEq: return "==";
    case BinaryOp::kNe: return "!=";
    case BinaryOp::kLt: return "<";
    case BinaryOp::kLe: return "<=";
    case BinaryOp::kGt: return ">";
    case BinaryOp::kGe: return ">=";
    case BinaryOp::kAnd: return "&&";
    case BinaryOp::kOr: return "||";
  }
  return "?";
}

bool IsArithmetic(BinaryOp op) {
  return op == BinaryOp::kAdd || op == BinaryOp::kSub ||
         op == BinaryOp::kMul || op == BinaryOp::kDiv || op == BinaryOp::kMod;
}

bool IsComparison(BinaryOp op) {
  return op == BinaryOp::kEq || op == BinaryOp::kNe || op == BinaryOp::kLt ||
         op == BinaryOp::kLe || op == BinaryOp::kGt || op == BinaryOp::kGe;
}

Expr Expr::Literal(std::int64_t value, SourceLoc loc) {
  Expr e;
  e.kind = Kind::kLiteral;
  e.value = value;
  e.loc = loc;
  return e;
}

Expr Expr::Variable(std::string name, SourceLoc loc) {
  Expr e;
  e.kind = Kind::kVariable;
  e.name = std::move(name);
  e.loc = loc;
  return e;
}

Expr Expr::Unary(UnaryOp op, Expr operand, SourceLoc loc) {
  Expr e;
  e.kind = Kind::kUnary;
  e.unary_op = op;
  e.loc = loc;
  e.operands.push_back(std::move(operand));
  return e;
}

Expr Expr::Binary(BinaryOp op, Expr lhs, Expr rhs, SourceLoc loc) {
  Expr e;
  e.kind = Kind::kBinary;
  e.binary_op = op;
  e.loc = loc;
  e.operands.push_back(std::move(lhs));
  e.operands.push_back(std::move(rhs));
  return e;
}

namespace {

template <typename T>
bool SameShapeList(const std::vector<T>& a, const std::vector<T>& b) {
  if (a.size() != b.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!SameShape(a[i], b[i])) {
      return false;
    }
  }
  return true;
}

void NumberExpr(Expr& e, NodeId& next) {
  e.id = next++;
  for (Expr& operand : e.operands) {
    NumberExpr(operand, next);
  }
}

void NumberBlock(std::vector<Stmt>& block, NodeId& next) {
  for (Stmt& s : block) {
    s.id = next++;
    if (s.kind != Stmt::Kind::kBreak) {
      NumberExpr(s.expr, next);
    }
    NumberBlock(s.body, next);
    NumberBlock(s.else_body, next);
  }
}

}  // namespace

bool SameShape(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) {
    return false;
  }
  switch (a.kind) {
    case Expr::Kind::kLiteral:
      return a.value == b.value;
    case Expr::Kind::kVariable:
      return a.name == b.name;
    case Expr::Kind::kUnary:
      return a.unary_op == b.unary_op && SameShapeList(a.operands, b.operands);
    case Expr::Kind::kBinary:
      return a.binary_op == b.binary_op &&
             SameShapeList(a.operands, b.operands);
  }
  return false;
}

bool SameShape(const Stmt& a, const Stmt& b) {
  if (a.kind != b.kind || a.target != b.target) {
    return false;
  }
  if (a.kind != Stmt::Kind::kBreak && !SameShape(a.expr, b.expr)) {
    return false;
  }
  return SameShapeList(a.body, b.body) &&
         SameShapeList(a.else_body, b.else_body);
}

bool SameShape(const Program& a, const Program& b) {
  if (a.functions.size() != b.functions.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.functions.size(); ++i) {
    const Function& fa = a.functions[i];
    const Function& fb = b.functions[i];
    if (fa.name != fb.name || fa.params != fb.params ||
        !SameShapeList(fa.body, fb.body)) {
      return false;
    }
  }
  return true;
}

std::size_t NumberNodes(Program& program) {
  NodeId next = 0;
  for (Function& f : program.functions) {
    NumberBlock(f.body, next);
  }
  return next;
}

}  // namespace mutsub::minilang
