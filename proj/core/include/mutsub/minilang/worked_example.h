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

// The multiply-by-repeated-addition worked example.
//
// multiply(a, b) adds a to an accumulator b times, negating both a and b
// first when b is negative. Eight mutants M0..M7 of it are described by the
// input region that kills each one; a mutant is killed by (a, b) iff a lies
// in its a-range AND b lies in its b-range:
//
//   mutant  a-range      b-range
//   M0      empty        empty        (equivalent)
//   M1      a != 0       b < 0
//   M2      a != 0       b != 0
//   M3      a != 0       b != 0
//   M4      a != 0       b < 0
//   M5      a != 0       any b
//   M6      a != 0       b != 0
//   M7      empty        empty        (equivalent)
//
// One representative test per input class gives the 8 x 4 kill matrix.

#ifndef MUTSUB_MINILANG_WORKED_EXAMPLE_H
#define MUTSUB_MINILANG_WORKED_EXAMPLE_H

#include <cstdint>
#include <string_view>
#include <vector>

#include "mutsub/kill_matrix.h"
#include "mutsub/minilang/harness.h"

namespace mutsub::minilang {

enum class Range { kEmpty, kAll, kNonZero, kNegative };

bool InRange(Range range, std::int64_t x);

struct KillRegion {
  MutantId mutant = 0;
  Range a = Range::kEmpty;
  Range b = Range::kEmpty;
  bool equivalent = false;

  bool Kills(std::int64_t a_value, std::int64_t b_value) const {
    return InRange(a, a_value) && InRange(b, b_value);
  }
};

// M0..M7 in order.
std::vector<KillRegion> WorkedExampleRegions();

// t1=(1,-1), t2=(1,1), t3=(1,0), t4=(0,-1). Ids 1..4, names t1..t4. The
// expected outcomes are those of the multiply program.
std::vector<HarnessTest> WorkedExampleTests();

// The 8-mutant x 4-test matrix derived from the regions; M0 and M7 carry an
// equivalence annotation.
KillMatrix WorkedExampleMatrix();

// Source of the multiply method in the mini-language.
extern const std::string_view kMultiplySource;

}  // namespace mutsub::minilang

#endif  // MUTSUB_MINILANG_WORKED_EXAMPLE_H
