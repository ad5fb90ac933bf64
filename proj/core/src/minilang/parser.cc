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

#include "mutsub/minilang/parser.h"

#include <cctype>
#include <charconv>
#include <set>
#include <utility>
#include <vector>

namespace mutsub::minilang {

SyntaxError::SyntaxError(SourceLoc loc, const std::string& message)
    : Error(std::to_string(loc.line) + ":" + std::to_string(loc.column) +
            ": " + message),
      loc_(loc) {}

namespace {

enum class Tok {
  kEnd, kIdent, kInt,
  kFn, kIf, kElse, kWhile, kBreak, kReturn,
  kLParen, kRParen, kLBrace, kRBrace, kComma, kSemi, kAssign,
  kPlus, kMinus, kStar, kSlash, kPercent,
  kEq, kNe, kLt, kLe, kGt, kGe, kAnd, kOr, kBang,
};

struct Token {
  Tok kind = Tok::kEnd;
  std::string text;
  std::int64_t value = 0;
  SourceLoc loc;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> Run() {
    std::vector<Token> tokens;
    while (true) {
      SkipTrivia();
      Token t;
      t.loc = {line_, column_};
      if (pos_ >= src_.size()) {
        t.kind = Tok::kEnd;
        tokens.push_back(t);
        return tokens;
      }
      char c = src_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        LexWord(t);
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        LexNumber(t);
      } else {
        LexPunct(t);
      }
      tokens.push_back(std::move(t));
    }
  }

 private:
  void Advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void SkipTrivia() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        Advance();
      } else if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
        while (pos_ < src_.size() && src_[pos_] != '\n') {
          Advance();
        }
      } else {
        break;
      }
    }
  }

  void LexWord(Token& t) {
    std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
            src_[pos_] == '_')) {
      Advance();
    }
    t.text = std::string(src_.substr(start, pos_ - start));
    if (t.text == "fn") t.kind = Tok::kFn;
    else if (t.text == "if") t.kind = Tok::kIf;
    else if (t.text == "else") t.kind = Tok::kElse;
    else if (t.text == "while") t.kind = Tok::kWhile;
    else if (t.text == "break") t.kind = Tok::kBreak;
    else if (t.text == "return") t.kind = Tok::kReturn;
    else t.kind = Tok::kIdent;
  }

  void LexNumber(Token& t) {
    std::size_t start = pos_;
    while (pos_ < src_.size() &&
           std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      Advance();
    }
    if (pos_ < src_.size() &&
        (std::isalpha(static_cast<unsigned char>(src_[pos_])) ||
         src_[pos_] == '_')) {
      throw SyntaxError({line_, column_}, "malformed integer literal");
    }
    t.kind = Tok::kInt;
    t.text = std::string(src_.substr(start, pos_ - start));
    auto [ptr, ec] =
        std::from_chars(t.text.data(), t.text.data() + t.text.size(), t.value);
    if (ec != std::errc()) {
      throw SyntaxError(t.loc, "integer literal '" + t.text + "' out of range");
    }
  }

  void LexPunct(Token& t) {
    char c = src_[pos_];
    char next = pos_ + 1 < src_.size() ? src_[pos_ + 1] : '\0';
    auto two = [&](Tok kind, const char* text) {
      t.kind = kind;
      t.text = text;
      Advance();
      Advance();
    };
    auto one = [&](Tok kind) {
      t.kind = kind;
      t.text = std::string(1, c);
      Advance();
    };
    switch (c) {
      case '(': one(Tok::kLParen); return;
      case ')': one(Tok::kRParen); return;
      case '{': one(Tok::kLBrace); return;
      case '}': one(Tok::kRBrace); return;
      case ',': one(Tok::kComma); return;
      case ';': one(Tok::kSemi); return;
      case '+': one(Tok::kPlus); return;
      case '-': one(Tok::kMinus); return;
      case '*': one(Tok::kStar); return;
      case '/': one(Tok::kSlash); return;
      case '%': one(Tok::kPercent); return;
      case '=':
        if (next == '=') two(Tok::kEq, "=="); else one(Tok::kAssign);
        return;
      case '!':
        if (next == '=') two(Tok::kNe, "!="); else one(Tok::kBang);
        return;
      case '<':
        if (next == '=') two(Tok::kLe, "<="); else one(Tok::kLt);
        return;
      case '>':
        if (next == '=') two(Tok::kGe, ">="); else one(Tok::kGt);
        return;
      case '&':
        if (next == '&') { two(Tok::kAnd, "&&"); return; }
        break;
      case '|':
        if (next == '|') { two(Tok::kOr, "||"); return; }
        break;
      default:
        break;
    }
    throw SyntaxError(t.loc, std::string("unexpected character '") + c + "'");
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

std::string Describe(const Token& t) {
  return t.kind == Tok::kEnd ? "end of input" : "'" + t.text + "'";
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Program Run() {
    Program program;
    std::set<std::string> names;
    while (Peek().kind != Tok::kEnd) {
      Function f = ParseFunction();
      if (!names.insert(f.name).second) {
        throw SyntaxError(f.loc, "duplicate function '" + f.name + "'");
      }
      program.functions.push_back(std::move(f));
    }
    if (program.functions.empty()) {
      throw SyntaxError(Peek().loc, "expected at least one function");
    }
    NumberNodes(program);
    return program;
  }

 private:
  const Token& Peek() const { return tokens_[pos_]; }

  const Token& Take() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

  bool Accept(Tok kind) {
    if (Peek().kind == kind) {
      Take();
      return true;
    }
    return false;
  }

  const Token& Expect(Tok kind, const char* what) {
    if (Peek().kind != kind) {
      throw SyntaxError(Peek().loc, std::string("expected ") + what +
                                        ", found " + Describe(Peek()));
    }
    return Take();
  }

  Function ParseFunction() {
    Function f;
    f.loc = Expect(Tok::kFn, "'fn'").loc;
    f.name = Expect(Tok::kIdent, "function name").text;
    Expect(Tok::kLParen, "'('");
    std::set<std::string> seen;
    if (Peek().kind != Tok::kRParen) {
      do {
        const Token& param = Expect(Tok::kIdent, "parameter name");
        if (!seen.insert(param.text).second) {
          throw SyntaxError(param.loc,
                            "duplicate parameter '" + param.text + "'");
        }
        f.params.push_back(param.text);
      } while (Accept(Tok::kComma));
    }
    Expect(Tok::kRParen, "')'");
    f.body = ParseBlock(/*loop_depth=*/0);
    return f;
  }

  std::vector<Stmt> ParseBlock(int loop_depth) {
    Expect(Tok::kLBrace, "'{'");
    std::vector<Stmt> block;
    while (Peek().kind != Tok::kRBrace) {
      if (Peek().kind == Tok::kEnd) {
        throw SyntaxError(Peek().loc, "expected '}', found end of input");
      }
      block.push_back(ParseStmt(loop_depth));
    }
    Take();
    return block;
  }

  Stmt ParseStmt(int loop_depth) {
    Stmt s;
    s.loc = Peek().loc;
    switch (Peek().kind) {
      case Tok::kIf:
        Take();
        s.kind = Stmt::Kind::kIf;
        s.expr = ParseCondition();
        s.body = ParseBlock(loop_depth);
        if (Accept(Tok::kElse)) {
          if (Peek().kind == Tok::kIf) {
            s.else_body.push_back(ParseStmt(loop_depth));
          } else {
            s.else_body = ParseBlock(loop_depth);
          }
        }
        return s;
      case Tok::kWhile:
        Take();
        s.kind = Stmt::Kind::kWhile;
        s.expr = ParseCondition();
        s.body = ParseBlock(loop_depth + 1);
        return s;
      case Tok::kBreak:
        if (loop_depth == 0) {
          throw SyntaxError(s.loc, "'break' outside of a loop");
        }
        Take();
        s.kind = Stmt::Kind::kBreak;
        Expect(Tok::kSemi, "';'");
        return s;
      case Tok::kReturn:
        Take();
        s.kind = Stmt::Kind::kReturn;
        s.expr = ParseExpr();
        Expect(Tok::kSemi, "';'");
        return s;
      case Tok::kIdent:
        s.kind = Stmt::Kind::kAssign;
        s.target = Take().text;
        Expect(Tok::kAssign, "'='");
        s.expr = ParseExpr();
        Expect(Tok::kSemi, "';'");
        return s;
      default:
        throw SyntaxError(Peek().loc,
                          "expected a statement, found " + Describe(Peek()));
    }
  }

  Expr ParseCondition() {
    Expect(Tok::kLParen, "'('");
    Expr cond = ParseExpr();
    Expect(Tok::kRParen, "')'");
    return cond;
  }

  Expr ParseExpr() { return ParseOr(); }

  // Left-associative binary level; `ops` maps tokens to operators.
  template <typename Next>
  Expr ParseLevel(std::initializer_list<std::pair<Tok, BinaryOp>> ops,
                  Next next) {
    Expr lhs = (this->*next)();
    while (true) {
      const Token& t = Peek();
      const std::pair<Tok, BinaryOp>* match = nullptr;
      for (const auto& op : ops) {
        if (op.first == t.kind) {
          match = &op;
        }
      }
      if (match == nullptr) {
        return lhs;
      }
      SourceLoc loc = Take().loc;
      Expr rhs = (this->*next)();
      lhs = Expr::Binary(match->second, std::move(lhs), std::move(rhs), loc);
    }
  }

  Expr ParseOr() {
    return ParseLevel({{Tok::kOr, BinaryOp::kOr}}, &Parser::ParseAnd);
  }
  Expr ParseAnd() {
    return ParseLevel({{Tok::kAnd, BinaryOp::kAnd}}, &Parser::ParseEquality);
  }
  Expr ParseEquality() {
    return ParseLevel({{Tok::kEq, BinaryOp::kEq}, {Tok::kNe, BinaryOp::kNe}},
                      &Parser::ParseRelational);
  }
  Expr ParseRelational() {
    return ParseLevel({{Tok::kLt, BinaryOp::kLt},
                       {Tok::kLe, BinaryOp::kLe},
                       {Tok::kGt, BinaryOp::kGt},
                       {Tok::kGe, BinaryOp::kGe}},
                      &Parser::ParseAdditive);
  }
  Expr ParseAdditive() {
    return ParseLevel({{Tok::kPlus, BinaryOp::kAdd},
                       {Tok::kMinus, BinaryOp::kSub}},
                      &Parser::ParseMultiplicative);
  }
  Expr ParseMultiplicative() {
    return ParseLevel({{Tok::kStar, BinaryOp::kMul},
                       {Tok::kSlash, BinaryOp::kDiv},
                       {Tok::kPercent, BinaryOp::kMod}},
                      &Parser::ParseUnary);
  }

  Expr ParseUnary() {
    SourceLoc loc = Peek().loc;
    if (Accept(Tok::kMinus)) {
      return Expr::Unary(UnaryOp::kNeg, ParseUnary(), loc);
    }
    if (Accept(Tok::kBang)) {
      return Expr::Unary(UnaryOp::kNot, ParseUnary(), loc);
    }
    return ParsePrimary();
  }

  Expr ParsePrimary() {
    const Token& t = Peek();
    switch (t.kind) {
      case Tok::kInt: {
        Take();
        return Expr::Literal(t.value, t.loc);
      }
      case Tok::kIdent: {
        Take();
        return Expr::Variable(t.text, t.loc);
      }
      case Tok::kLParen: {
        Take();
        Expr inner = ParseExpr();
        Expect(Tok::kRParen, "')'");
        return inner;
      }
      default:
        throw SyntaxError(t.loc,
                          "expected an expression, found " + Describe(t));
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

Program ParseProgram(std::string_view source) {
  return Parser(Lexer(source).Run()).Run();
}

}  // namespace mutsub::minilang
