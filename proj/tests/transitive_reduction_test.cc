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

#include <random>

#include "gtest/gtest.h"
#include "mutsub/error.h"
#include "mutsub/subsumption.h"
#include "testing/oracle.h"

namespace mutsub {
namespace {

using Edges = std::vector<Edge>;

TEST(TransitiveReductionTest, Triangle) {
  EXPECT_EQ(TransitiveReduction(3, {{0, 1}, {1, 2}, {0, 2}}),
            (Edges{{0, 1}, {1, 2}}));
}

TEST(TransitiveReductionTest, ChainIsFixedPoint) {
  Edges chain = {{0, 1}, {1, 2}, {2, 3}};
  EXPECT_EQ(TransitiveReduction(4, chain), chain);
}

TEST(TransitiveReductionTest, DiamondKeepsBothPaths) {
  Edges diamond = {{0, 1}, {0, 2}, {1, 3}, {2, 3}};
  EXPECT_EQ(TransitiveReduction(4, diamond), diamond);
  Edges with_shortcut = diamond;
  with_shortcut.emplace_back(0, 3);
  EXPECT_EQ(TransitiveReduction(4, with_shortcut), diamond);
}

TEST(TransitiveReductionTest, DuplicatesAndEmpty) {
  EXPECT_EQ(TransitiveReduction(2, {{0, 1}, {0, 1}}), (Edges{{0, 1}}));
  EXPECT_TRUE(TransitiveReduction(0, {}).empty());
  EXPECT_TRUE(TransitiveReduction(5, {}).empty());
}

TEST(TransitiveReductionTest, RejectsCyclesAndBadNodes) {
  EXPECT_THROW(TransitiveReduction(2, {{0, 1}, {1, 0}}), Error);
  EXPECT_THROW(TransitiveReduction(1, {{0, 0}}), Error);
  EXPECT_THROW(TransitiveReduction(2, {{0, 2}}), Error);
}

// Random DAGs: edges only go from lower to higher index under a random
// relabelling.
TEST(TransitiveReductionTest, RandomDagsPreserveReachability) {
  std::mt19937_64 rng(7);
  for (int iteration = 0; iteration < 500; ++iteration) {
    std::size_t n = rng() % 11;
    std::vector<std::size_t> label(n);
    for (std::size_t i = 0; i < n; ++i) {
      label[i] = i;
    }
    std::shuffle(label.begin(), label.end(), rng);
    double density = static_cast<double>(rng() % 100) / 100.0;
    Edges edges;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        if (static_cast<double>(rng() % 1000) / 1000.0 < density) {
          edges.emplace_back(label[a], label[b]);
        }
      }
    }
    Edges reduced = TransitiveReduction(n, edges);
    EXPECT_EQ(testing::Closure(n, reduced), testing::Closure(n, edges));
    // Minimality: dropping any kept edge changes reachability.
    for (std::size_t e = 0; e < reduced.size(); ++e) {
      Edges fewer = reduced;
      fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(e));
      EXPECT_NE(testing::Closure(n, fewer), testing::Closure(n, edges));
    }
    EXPECT_EQ(TransitiveReduction(n, reduced), reduced);
  }
}

}  // namespace
}  // namespace mutsub
