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

#ifndef MUTSUB_MINILANG_AST_H
#define MUTSUB_MINILANG_AST_H

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

namespace mutsub::minilang {

struct SourceLoc {
  int line = 0;
  int column = 0;

  friend auto operator<=>(const SourceLoc&, const SourceLoc&) = default;
};

// Preorder index assigned by the parser. Nodes synthesized by a mutation
// carry kSyntheticNode.
using NodeId = std::size_t;
inline constexpr NodeId kSyntheticNode = std::numeric_limits<NodeId>::max();

enum class UnaryOp { kNeg, kNot };

enum class BinaryOp {
  kAdd, kSub, kMul, kDiv, kMod,
  kEq, kNe, kLt, kLe, kGt, kGe,
  kAnd, kOr,
};

std::string_view Spelling(UnaryOp op);
std::string_view Spelling(BinaryOp op);
bool IsArithmetic(BinaryOp op);
bool IsComparison(BinaryOp op);

struct Expr {
  enum class Kind { kLiteral, kVariable, kUnary, kBinary };

  Kind kind = Kind::kLiteral;
  NodeId id = kSyntheticNode;
  SourceLoc loc;
  std::int64_t value = 0;  // kLiteral; always >= 0 as written
  std::string name;        // kVariable
  UnaryOp unary_op = UnaryOp::kNeg;
  BinaryOp binary_op = BinaryOp::kAdd;
  // One operand for kUnary, two (lhs, rhs) for kBinary.
  std::vector<Expr> operands;

  static Expr Literal(std::int64_t value, SourceLoc loc = {});
  static Expr Variable(std::string name, SourceLoc loc = {});
  static Expr Unary(UnaryOp op, Expr operand, SourceLoc loc = {});
  static Expr Binary(BinaryOp op, Expr lhs, Expr rhs, SourceLoc loc = {});
};

struct Stmt {
  enum class Kind { kAssign, kIf, kWhile, kBreak, kReturn };

  Kind kind = Kind::kBreak;
  NodeId id = kSyntheticNode;
  SourceLoc loc;
  std::string target;  // kAssign
  // Assigned value, if/while condition or returned value. Unused for kBreak.
  Expr expr;
  std::vector<Stmt> body;       // if-branch or loop body
  std::vector<Stmt> else_body;  // kIf only
};

struct Function {
  std::string name;
  std::vector<std::string> params;
  std::vector<Stmt> body;
  SourceLoc loc;
};

// The first function is the entry point exercised by tests.
struct Program {
  std::vector<Function> functions;

  const Function& Entry() const { return functions.front(); }
};

// Equality of shape: ignores node ids and source locations.
bool SameShape(const Expr& a, const Expr& b);
bool SameShape(const Stmt& a, const Stmt& b);
bool SameShape(const Program& a, const Program& b);

// Reassigns preorder node ids; returns the number of nodes.
std::size_t NumberNodes(Program& program);

}  // namespace mutsub::minilang

#endif  // MUTSUB_MINILANG_AST_H
