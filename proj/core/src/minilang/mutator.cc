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

#include "mutsub/minilang/mutator.h"

#include <algorithm>
#include <array>
#include <tuple>
#include <utility>

#include "mutsub/error.h"

namespace mutsub::minilang {

namespace {

constexpr std::array kArithmetic = {BinaryOp::kAdd, BinaryOp::kSub,
                                    BinaryOp::kMul, BinaryOp::kDiv,
                                    BinaryOp::kMod};
constexpr std::array kRelational = {BinaryOp::kEq, BinaryOp::kNe,
                                    BinaryOp::kLt, BinaryOp::kLe,
                                    BinaryOp::kGt, BinaryOp::kGe};

// Alternatives for `op` in family order, excluding `op` itself.
template <std::size_t N>
std::vector<BinaryOp> Alternatives(const std::array<BinaryOp, N>& family,
                                   BinaryOp op) {
  std::vector<BinaryOp> out;
  for (BinaryOp candidate : family) {
    if (candidate != op) {
      out.push_back(candidate);
    }
  }
  return out;
}

std::vector<BinaryOp> AlternativesFor(Operator op, BinaryOp original) {
  return op == Operator::kAor ? Alternatives(kArithmetic, original)
                              : Alternatives(kRelational, original);
}

class SiteCollector {
 public:
  explicit SiteCollector(const std::set<Operator>& ops) : ops_(ops) {}

  std::vector<MutationEdit> Collect(const Program& program) {
    for (const Function& f : program.functions) {
      VisitBlock(f.body);
    }
    return std::move(sites_);
  }

 private:
  bool Enabled(Operator op) const { return ops_.contains(op); }

  void Add(const NodeId node, SourceLoc loc, Operator op, std::size_t rank,
           std::string replacement) {
    sites_.push_back({node, loc, op, rank, std::move(replacement)});
  }

  void VisitBlock(const std::vector<Stmt>& block) {
    for (const Stmt& s : block) {
      switch (s.kind) {
        case Stmt::Kind::kIf:
        case Stmt::Kind::kWhile:
          if (Enabled(Operator::kCondNeg)) {
            Add(s.id, s.loc, Operator::kCondNeg, 0, "!(...)");
          }
          break;
        case Stmt::Kind::kBreak:
          if (Enabled(Operator::kBreakDel)) {
            Add(s.id, s.loc, Operator::kBreakDel, 0, "<deleted>");
          }
          break;
        default:
          break;
      }
      if (s.kind != Stmt::Kind::kBreak) {
        VisitExpr(s.expr);
      }
      VisitBlock(s.body);
      VisitBlock(s.else_body);
    }
  }

  void VisitExpr(const Expr& e) {
    if (e.kind == Expr::Kind::kVariable && Enabled(Operator::kUoiNeg)) {
      Add(e.id, e.loc, Operator::kUoiNeg, 0, "-" + e.name);
    }
    if (e.kind == Expr::Kind::kBinary) {
      for (Operator op : {Operator::kAor, Operator::kRor}) {
        bool applies = op == Operator::kAor ? IsArithmetic(e.binary_op)
                                            : IsComparison(e.binary_op);
        if (!applies || !Enabled(op)) {
          continue;
        }
        std::vector<BinaryOp> alternatives = AlternativesFor(op, e.binary_op);
        for (std::size_t rank = 0; rank < alternatives.size(); ++rank) {
          Add(e.id, e.loc, op, rank, std::string(Spelling(alternatives[rank])));
        }
      }
    }
    for (const Expr& operand : e.operands) {
      VisitExpr(operand);
    }
  }

  const std::set<Operator>& ops_;
  std::vector<MutationEdit> sites_;
};

class EditApplier {
 public:
  explicit EditApplier(const MutationEdit& edit) : edit_(edit) {}

  void Apply(Program& program) {
    for (Function& f : program.functions) {
      if (VisitBlock(f.body)) {
        return;
      }
    }
    throw Error("mutation target node " + std::to_string(edit_.node) +
                " not found");
  }

 private:
  bool VisitBlock(std::vector<Stmt>& block) {
    for (auto it = block.begin(); it != block.end(); ++it) {
      Stmt& s = *it;
      if (s.id == edit_.node) {
        ApplyToStmt(block, it);
        return true;
      }
      if (s.kind != Stmt::Kind::kBreak && VisitExpr(s.expr)) {
        return true;
      }
      if (VisitBlock(s.body) || VisitBlock(s.else_body)) {
        return true;
      }
    }
    return false;
  }

  void ApplyToStmt(std::vector<Stmt>& block, std::vector<Stmt>::iterator it) {
    if (edit_.op == Operator::kBreakDel && it->kind == Stmt::Kind::kBreak) {
      block.erase(it);
      return;
    }
    if (edit_.op == Operator::kCondNeg &&
        (it->kind == Stmt::Kind::kIf || it->kind == Stmt::Kind::kWhile)) {
      SourceLoc loc = it->expr.loc;
      it->expr = Expr::Unary(UnaryOp::kNot, std::move(it->expr), loc);
      return;
    }
    Mismatch();
  }

  bool VisitExpr(Expr& e) {
    if (e.id == edit_.node) {
      ApplyToExpr(e);
      return true;
    }
    for (Expr& operand : e.operands) {
      if (VisitExpr(operand)) {
        return true;
      }
    }
    return false;
  }

  void ApplyToExpr(Expr& e) {
    if (edit_.op == Operator::kUoiNeg && e.kind == Expr::Kind::kVariable) {
      SourceLoc loc = e.loc;
      e = Expr::Unary(UnaryOp::kNeg, std::move(e), loc);
      return;
    }
    if ((edit_.op == Operator::kAor || edit_.op == Operator::kRor) &&
        e.kind == Expr::Kind::kBinary) {
      bool applies = edit_.op == Operator::kAor ? IsArithmetic(e.binary_op)
                                                : IsComparison(e.binary_op);
      std::vector<BinaryOp> alternatives =
          applies ? AlternativesFor(edit_.op, e.binary_op)
                  : std::vector<BinaryOp>{};
      if (edit_.rank < alternatives.size()) {
        e.binary_op = alternatives[edit_.rank];
        return;
      }
    }
    Mismatch();
  }

  [[noreturn]] void Mismatch() const {
    throw Error(std::string(Tag(edit_.op)) + " does not apply to node " +
                std::to_string(edit_.node));
  }

  const MutationEdit& edit_;
};

}  // namespace

std::string_view Tag(Operator op) {
  switch (op) {
    case Operator::kAor: return "AOR";
    case Operator::kRor: return "ROR";
    case Operator::kCondNeg: return "COND-NEG";
    case Operator::kBreakDel: return "BREAK-DEL";
    case Operator::kUoiNeg: return "UOI-NEG";
  }
  return "?";
}

std::optional<Operator> OperatorFromTag(std::string_view tag) {
  for (Operator op : AllOperators()) {
    if (Tag(op) == tag) {
      return op;
    }
  }
  return std::nullopt;
}

std::set<Operator> AllOperators() {
  return {Operator::kAor, Operator::kRor, Operator::kCondNeg,
          Operator::kBreakDel, Operator::kUoiNeg};
}

std::set<Operator> ParseOperatorList(std::string_view list) {
  std::set<Operator> ops;
  while (!list.empty()) {
    std::size_t comma = list.find(',');
    std::string_view tag = list.substr(0, comma);
    list = comma == std::string_view::npos ? std::string_view{}
                                           : list.substr(comma + 1);
    while (!tag.empty() && tag.front() == ' ') {
      tag.remove_prefix(1);
    }
    while (!tag.empty() && tag.back() == ' ') {
      tag.remove_suffix(1);
    }
    if (tag.empty()) {
      continue;
    }
    auto op = OperatorFromTag(tag);
    if (!op) {
      throw Error("unknown mutation operator '" + std::string(tag) +
                  "' (expected AOR, ROR, COND-NEG, BREAK-DEL or UOI-NEG)");
    }
    ops.insert(*op);
  }
  return ops;
}

Program ApplyMutation(const Program& base, const MutationEdit& edit) {
  Program mutated = base;
  EditApplier(edit).Apply(mutated);
  return mutated;
}

std::vector<GeneratedMutant> GenerateMutants(const Program& program,
                                             const std::set<Operator>& ops) {
  std::vector<MutationEdit> sites = SiteCollector(ops).Collect(program);
  std::stable_sort(sites.begin(), sites.end(),
                   [](const MutationEdit& a, const MutationEdit& b) {
                     return std::make_tuple(a.loc, Tag(a.op), a.rank, a.node) <
                            std::make_tuple(b.loc, Tag(b.op), b.rank, b.node);
                   });
  auto base = std::make_shared<const Program>(program);
  std::vector<GeneratedMutant> mutants;
  mutants.reserve(sites.size());
  for (MutationEdit& site : sites) {
    GeneratedMutant mutant;
    mutant.mutant_id = mutants.size();
    mutant.base = base;
    mutant.line_number = static_cast<std::size_t>(std::max(site.loc.line, 1));
    mutant.mutated = ApplyMutation(*base, site);
    mutant.edit = std::move(site);
    mutants.push_back(std::move(mutant));
  }
  return mutants;
}

}  // namespace mutsub::minilang
