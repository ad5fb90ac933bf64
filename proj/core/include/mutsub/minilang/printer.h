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

#ifndef MUTSUB_MINILANG_PRINTER_H
#define MUTSUB_MINILANG_PRINTER_H

#include <string>

#include "mutsub/minilang/ast.h"

namespace mutsub::minilang {

// Renders source text that parses back to a program of the same shape.
// Parentheses are emitted only where precedence or associativity needs them.
std::string Render(const Program& program);
std::string Render(const Expr& expr);

}  // namespace mutsub::minilang

#endif  // MUTSUB_MINILANG_PRINTER_H
