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

#include "mutsub/minilang/printer.h"

namespace mutsub::minilang {

namespace {

constexpr int kUnaryPrecedence = 7;
constexpr int kPrimaryPrecedence = 8;

int Precedence(BinaryOp op) {
  switch (op) {
    case BinaryOp::kOr: return 1;
    case BinaryOp::kAnd: return 2;
    case BinaryOp::kEq:
    case BinaryOp::kNe: return 3;
    case BinaryOp::kLt:
    case BinaryOp::kLe:
    case BinaryOp::kGt:
    case BinaryOp::kGe: return 4;
    case BinaryOp::kAdd:
    case BinaryOp::kSub: return 5;
    case BinaryOp::kMul:
    case BinaryOp::kDiv:
    case BinaryOp::kMod: return 6;
  }
  return 0;
}

int Precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::kBinary: return Precedence(e.binary_op);
    case Expr::Kind::kUnary: return kUnaryPrecedence;
    default: return kPrimaryPrecedence;
  }
}

void RenderExpr(const Expr& e, std::string& out);

void RenderOperand(const Expr& e, bool parenthesize, std::string& out) {
  if (parenthesize) {
    out += '(';
  }
  RenderExpr(e, out);
  if (parenthesize) {
    out += ')';
  }
}

void RenderExpr(const Expr& e, std::string& out) {
  switch (e.kind) {
    case Expr::Kind::kLiteral:
      out += std::to_string(e.value);
      return;
    case Expr::Kind::kVariable:
      out += e.name;
      return;
    case Expr::Kind::kUnary: {
      out += Spelling(e.unary_op);
      // Nested unaries are parenthesized for readability: -(-x), !(-x).
      const Expr& operand = e.operands[0];
      RenderOperand(operand, Precedence(operand) <= kUnaryPrecedence, out);
      return;
    }
    case Expr::Kind::kBinary: {
      int prec = Precedence(e.binary_op);
      RenderOperand(e.operands[0], Precedence(e.operands[0]) < prec, out);
      out += ' ';
      out += Spelling(e.binary_op);
      out += ' ';
      RenderOperand(e.operands[1], Precedence(e.operands[1]) <= prec, out);
      return;
    }
  }
}

void Indent(int depth, std::string& out) { out.append(2 * depth, ' '); }

void RenderBlock(const std::vector<Stmt>& block, int depth, std::string& out);

void RenderIf(const Stmt& s, int depth, std::string& out) {
  out += "if (";
  RenderExpr(s.expr, out);
  out += ") {\n";
  RenderBlock(s.body, depth + 1, out);
  Indent(depth, out);
  out += '}';
  if (s.else_body.size() == 1 && s.else_body[0].kind == Stmt::Kind::kIf) {
    out += " else ";
    RenderIf(s.else_body[0], depth, out);
    return;
  }
  if (!s.else_body.empty()) {
    out += " else {\n";
    RenderBlock(s.else_body, depth + 1, out);
    Indent(depth, out);
    out += '}';
  }
}

void RenderStmt(const Stmt& s, int depth, std::string& out) {
  Indent(depth, out);
  switch (s.kind) {
    case Stmt::Kind::kAssign:
      out += s.target + " = ";
      RenderExpr(s.expr, out);
      out += ";\n";
      return;
    case Stmt::Kind::kIf:
      RenderIf(s, depth, out);
      out += '\n';
      return;
    case Stmt::Kind::kWhile:
      out += "while (";
      RenderExpr(s.expr, out);
      out += ") {\n";
      RenderBlock(s.body, depth + 1, out);
      Indent(depth, out);
      out += "}\n";
      return;
    case Stmt::Kind::kBreak:
      out += "break;\n";
      return;
    case Stmt::Kind::kReturn:
      out += "return ";
      RenderExpr(s.expr, out);
      out += ";\n";
      return;
  }
}

void RenderBlock(const std::vector<Stmt>& block, int depth, std::string& out) {
  for (const Stmt& s : block) {
    RenderStmt(s, depth, out);
  }
}

}  // namespace

std::string Render(const Expr& expr) {
  std::string out;
  RenderExpr(expr, out);
  return out;
}

std::string Render(const Program& program) {
  std::string out;
  for (std::size_t i = 0; i < program.functions.size(); ++i) {
    const Function& f = program.functions[i];
    if (i > 0) {
      out += '\n';
    }
    out += "fn " + f.name + "(";
    for (std::size_t p = 0; p < f.params.size(); ++p) {
      out += (p > 0 ? ", " : "") + f.params[p];
    }
    out += ") {\n";
    RenderBlock(f.body, 1, out);
    out += "}\n";
  }
  return out;
}

}  // namespace mutsub::minilang
