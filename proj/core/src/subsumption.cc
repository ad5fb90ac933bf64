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

#include "mutsub/subsumption.h"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>

#include "mutsub/error.h"

namespace mutsub {

namespace {

// Row-per-node reachability bitsets.
class BitRows {
 public:
  explicit BitRows(std::size_t n) : words_((n + 63) / 64), bits_(n * words_) {}

  void Set(std::size_t row, std::size_t col) {
    bits_[row * words_ + col / 64] |= std::uint64_t{1} << (col % 64);
  }
  bool Test(std::size_t row, std::size_t col) const {
    return ((bits_[row * words_ + col / 64] >> (col % 64)) & 1U) != 0;
  }
  void OrInto(std::size_t dst, std::size_t src) {
    for (std::size_t w = 0; w < words_; ++w) {
      bits_[dst * words_ + w] |= bits_[src * words_ + w];
    }
  }

 private:
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

void MarkSubsuming(std::vector<SubsumptionGroup>& groups) {
  for (SubsumptionGroup& group : groups) {
    group.is_subsuming = std::none_of(
        groups.begin(), groups.end(), [&](const SubsumptionGroup& other) {
          return other.kill_set.IsStrictSubsetOf(group.kill_set);
        });
  }
}

}  // namespace

bool DynamicallySubsumes(const KillMatrix& matrix, MutantId a, MutantId b) {
  const KillSet& killers_a = matrix.Row(matrix.IndexOf(a));
  const KillSet& killers_b = matrix.Row(matrix.IndexOf(b));
  return !killers_a.Empty() && killers_a.IsSubsetOf(killers_b);
}

std::vector<SubsumptionGroup> GroupMutants(const KillMatrix& matrix) {
  std::vector<std::size_t> order(matrix.MutantCount());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return matrix.mutants()[x].id < matrix.mutants()[y].id;
  });

  std::vector<SubsumptionGroup> groups;
  std::map<KillSet, GroupId> by_kill_set;
  for (std::size_t index : order) {
    const KillSet& row = matrix.Row(index);
    if (row.Empty()) {
      continue;
    }
    auto [it, inserted] = by_kill_set.emplace(row, groups.size());
    if (inserted) {
      SubsumptionGroup group;
      group.group_id = groups.size();
      group.kill_set = row;
      groups.push_back(std::move(group));
    }
    groups[it->second].mutant_ids.push_back(matrix.mutants()[index].id);
  }
  MarkSubsuming(groups);
  return groups;
}

std::vector<Edge> ContainmentEdges(
    const std::vector<SubsumptionGroup>& groups) {
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < groups.size(); ++a) {
    for (std::size_t b = 0; b < groups.size(); ++b) {
      if (groups[a].kill_set.IsStrictSubsetOf(groups[b].kill_set)) {
        edges.emplace_back(a, b);
      }
    }
  }
  return edges;
}

std::vector<Edge> TransitiveReduction(std::size_t node_count,
                                      const std::vector<Edge>& edges) {
  std::vector<std::vector<std::size_t>> successors(node_count);
  std::vector<std::size_t> in_degree(node_count, 0);
  for (const auto& [from, to] : edges) {
    if (from >= node_count || to >= node_count) {
      throw Error("edge (" + std::to_string(from) + ", " + std::to_string(to) +
                  ") references a node outside 0.." +
                  std::to_string(node_count));
    }
    successors[from].push_back(to);
  }
  for (auto& succ : successors) {
    std::sort(succ.begin(), succ.end());
    succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
    for (std::size_t to : succ) {
      ++in_degree[to];
    }
  }

  // Kahn's algorithm; a leftover node means a cycle.
  std::vector<std::size_t> topo;
  topo.reserve(node_count);
  for (std::size_t n = 0; n < node_count; ++n) {
    if (in_degree[n] == 0) {
      topo.push_back(n);
    }
  }
  for (std::size_t head = 0; head < topo.size(); ++head) {
    for (std::size_t to : successors[topo[head]]) {
      if (--in_degree[to] == 0) {
        topo.push_back(to);
      }
    }
  }
  if (topo.size() != node_count) {
    throw Error("transitive reduction requires an acyclic graph; cycle found");
  }

  // Strict descendants of every node, filled in reverse topological order.
  BitRows reach(node_count);
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    for (std::size_t to : successors[*it]) {
      reach.Set(*it, to);
      reach.OrInto(*it, to);
    }
  }

  std::vector<Edge> reduced;
  for (std::size_t from = 0; from < node_count; ++from) {
    for (std::size_t to : successors[from]) {
      bool implied = std::any_of(
          successors[from].begin(), successors[from].end(),
          [&](std::size_t via) { return via != to && reach.Test(via, to); });
      if (!implied) {
        reduced.emplace_back(from, to);
      }
    }
  }
  return reduced;
}

Dmsg BuildDmsg(std::vector<SubsumptionGroup> groups) {
  std::map<KillSet, GroupId> seen;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    const SubsumptionGroup& group = groups[i];
    if (group.group_id != i) {
      throw Error("group at position " + std::to_string(i) + " has id " +
                  std::to_string(group.group_id));
    }
    if (group.mutant_ids.empty()) {
      throw Error("group " + std::to_string(i) + " has no mutants");
    }
    if (group.kill_set.Empty()) {
      throw Error("group " + std::to_string(i) +
                  " has an empty kill set; survived mutants form no group");
    }
    auto [it, inserted] = seen.emplace(group.kill_set, i);
    if (!inserted) {
      throw Error("groups " + std::to_string(it->second) + " and " +
                  std::to_string(i) + " have identical kill sets");
    }
  }
  MarkSubsuming(groups);
  Dmsg dmsg;
  dmsg.edges = TransitiveReduction(groups.size(), ContainmentEdges(groups));
  dmsg.groups = std::move(groups);
  return dmsg;
}

std::set<GroupId> SubsumingGroups(const Dmsg& dmsg) {
  std::vector<bool> subsumed(dmsg.groups.size(), false);
  for (const auto& [from, to] : ContainmentEdges(dmsg.groups)) {
    subsumed[to] = true;
  }
  std::set<GroupId> result;
  for (std::size_t g = 0; g < dmsg.groups.size(); ++g) {
    if (!subsumed[g]) {
      result.insert(dmsg.groups[g].group_id);
    }
  }
  return result;
}

std::set<MutantId> FilterRedundant(const KillMatrix& matrix, const Dmsg& dmsg) {
  std::set<MutantId> retained;
  for (GroupId g : SubsumingGroups(dmsg)) {
    const std::vector<MutantId>& members = dmsg.groups[g].mutant_ids;
    MutantId representative =
        *std::min_element(members.begin(), members.end());
    if (!matrix.FindMutant(representative)) {
      throw Error("DMSG mutant " + std::to_string(representative) +
                  " is not part of the kill matrix");
    }
    retained.insert(representative);
  }
  return retained;
}

}  // namespace mutsub
