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

// First-order AST mutation for the mini-language.
//
//   AOR        arithmetic operator replacement: + - * / % by each other
//   ROR        relational operator replacement: == != < <= > >= by each other
//   COND-NEG   wrap an if/while condition in !( )
//   BREAK-DEL  delete a break statement
//   UOI-NEG    replace a variable read x by -x
//
// These operators belong to this harness; they are not an attempt to
// replicate any particular tool's operator catalogue.

#ifndef MUTSUB_MINILANG_MUTATOR_H
#define MUTSUB_MINILANG_MUTATOR_H

#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "mutsub/minilang/ast.h"

namespace mutsub::minilang {

enum class Operator { kAor, kRor, kCondNeg, kBreakDel, kUoiNeg };

std::string_view Tag(Operator op);
std::optional<Operator> OperatorFromTag(std::string_view tag);
std::set<Operator> AllOperators();
// Parses a comma-separated tag list such as "AOR,ROR". Throws mutsub::Error
// on an unknown tag. An empty string yields the empty set.
std::set<Operator> ParseOperatorList(std::string_view list);

struct MutationEdit {
  NodeId node = kSyntheticNode;
  SourceLoc loc;
  Operator op = Operator::kAor;
  // Rank of the replacement among the operator's alternatives for this node.
  std::size_t rank = 0;
  // Human-readable replacement, e.g. "-" for AOR or "!(...)" for COND-NEG.
  std::string replacement;
};

struct GeneratedMutant {
  std::size_t mutant_id = 0;
  std::shared_ptr<const Program> base;
  MutationEdit edit;
  std::size_t line_number = 1;
  Program mutated;
};

// Every applicable (node, replacement) pair, ordered by source position, then
// operator tag, then replacement rank. Ids are 0..n-1 in that order.
std::vector<GeneratedMutant> GenerateMutants(const Program& program,
                                             const std::set<Operator>& ops);

// Applies one edit to a copy of `base`. Throws mutsub::Error if the edit does
// not match the node it names.
Program ApplyMutation(const Program& base, const MutationEdit& edit);

}  // namespace mutsub::minilang

#endif  // MUTSUB_MINILANG_MUTATOR_H
