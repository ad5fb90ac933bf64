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

#ifndef MUTSUB_MINILANG_PARSER_H
#define MUTSUB_MINILANG_PARSER_H

#include <string>
#include <string_view>

#include "mutsub/error.h"
#include "mutsub/minilang/ast.h"

namespace mutsub::minilang {

// Lexical or syntactic error. what() reads "<line>:<column>: <message>".
class SyntaxError : public Error {
 public:
  SyntaxError(SourceLoc loc, const std::string& message);

  SourceLoc loc() const { return loc_; }

 private:
  SourceLoc loc_;
};

// Parses a whole program (grammar in docs/minilang.ebnf). Every node carries
// its source location and a preorder NodeId. Besides syntax, rejects an
// empty program, duplicate function or parameter names, and `break` outside
// a loop.
Program ParseProgram(std::string_view source);

}  // namespace mutsub::minilang

#endif  // MUTSUB_MINILANG_PARSER_H
