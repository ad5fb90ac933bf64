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

// Dynamic mutant subsumption.
//
// Mutant A dynamically subsumes mutant B with respect to a test set when A is
// killed by at least one test and every test that kills A also kills B, i.e.
// killers(A) is a non-empty subset of killers(B). The relation is a preorder
// on killed mutants; its equivalence classes (identical kill sets) are the
// nodes of the dynamic mutant subsumption graph (DMSG). An edge A -> B means
// group A subsumes group B. Survived mutants belong to no group.

#ifndef MUTSUB_SUBSUMPTION_H
#define MUTSUB_SUBSUMPTION_H

#include <cstddef>
#include <set>
#include <utility>
#include <vector>

#include "mutsub/kill_matrix.h"

namespace mutsub {

using GroupId = std::size_t;

// Directed edge (from, to).
using Edge = std::pair<std::size_t, std::size_t>;

struct SubsumptionGroup {
  GroupId group_id = 0;
  // Ascending; never empty.
  std::vector<MutantId> mutant_ids;
  KillSet kill_set;
  bool is_subsuming = false;

  friend bool operator==(const SubsumptionGroup&,
                         const SubsumptionGroup&) = default;
};

struct Dmsg {
  // groups[i].group_id == i.
  std::vector<SubsumptionGroup> groups;
  // Transitively reduced, sorted ascending, edges subsumer -> subsumed.
  std::vector<Edge> edges;
};

// True iff killers(a) is non-empty and a subset of killers(b). Reflexive on
// killed mutants. Throws on unknown ids.
bool DynamicallySubsumes(const KillMatrix& matrix, MutantId a, MutantId b);

// One group per distinct non-empty kill set, ids assigned in ascending order
// of each group's smallest member id, with is_subsuming set.
std::vector<SubsumptionGroup> GroupMutants(const KillMatrix& matrix);

// Every pair (A, B) with kill_set(A) a strict subset of kill_set(B), in
// ascending order. Indices are positions in `groups`.
std::vector<Edge> ContainmentEdges(const std::vector<SubsumptionGroup>& groups);

// Builds the DMSG: re-numbers nothing, recomputes is_subsuming, and stores the
// transitive reduction of the containment relation. Throws mutsub::Error on
// duplicate or empty kill sets, or if group ids are not 0..n-1 in order.
Dmsg BuildDmsg(std::vector<SubsumptionGroup> groups);

// Transitive reduction of a DAG over nodes 0..node_count-1. Throws
// mutsub::Error if the graph has a cycle or an out-of-range endpoint.
// Duplicate input edges are tolerated. Output is sorted ascending.
std::vector<Edge> TransitiveReduction(std::size_t node_count,
                                      const std::vector<Edge>& edges);

// Groups whose kill set is minimal under inclusion, computed from the full
// containment relation rather than the reduced edges.
std::set<GroupId> SubsumingGroups(const Dmsg& dmsg);

// One representative per subsuming group: its smallest mutant id.
std::set<MutantId> FilterRedundant(const KillMatrix& matrix, const Dmsg& dmsg);

}  // namespace mutsub

#endif  // MUTSUB_SUBSUMPTION_H
