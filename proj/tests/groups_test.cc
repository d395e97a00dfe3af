// Copyright 2026 The soficlab Authors
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

#include "sofic/groups.h"

#include <gtest/gtest.h>

#include <numeric>

#include "sofic/error.h"

namespace sofic {
namespace {

bool BruteAssociative(const MultiplicationTable& t) {
  const int n = t.order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (t.Multiply(t.Multiply(a, b), c) != t.Multiply(a, t.Multiply(b, c)))
          return false;
  return true;
}

TEST(Groups, PresetOrdersAndAxioms) {
  const std::vector<std::pair<std::string, int>> presets = {
      {"z1", 1}, {"z2", 2}, {"z7", 7}, {"s3", 6}, {"s4", 24},
      {"d2", 4}, {"d5", 10}, {"s3*z5", 30}, {"z2*z2*z3", 12}};
  for (const auto& [preset, order] : presets) {
    const GroupPreset g = ParseGroupPreset(preset);
    EXPECT_EQ(g.table.order(), order) << preset;
    EXPECT_TRUE(BruteAssociative(g.table)) << preset;
    if (order > 1) {
      EXPECT_EQ(g.Cayley().NumComponents(), 1) << preset;
    }
  }
}

TEST(Groups, AbelianFlags) {
  EXPECT_TRUE(CyclicGroup(6).table.IsAbelian());
  EXPECT_FALSE(SymmetricGroup(3).table.IsAbelian());
  EXPECT_FALSE(DihedralGroup(4).table.IsAbelian());
  EXPECT_TRUE(DihedralGroup(2).table.IsAbelian());
}

TEST(Groups, SymmetricTableIsComposition) {
  const GroupPreset s4 = SymmetricGroup(4);
  for (int a = 0; a < 24; ++a) {
    const std::vector<int> pa = PermutationUnrank(4, a);
    EXPECT_EQ(PermutationRank(pa), a);
    for (int b = 0; b < 24; ++b) {
      const std::vector<int> pb = PermutationUnrank(4, b);
      std::vector<int> ab(4);
      for (int i = 0; i < 4; ++i) ab[i] = pa[pb[i]];
      EXPECT_EQ(s4.table.Multiply(a, b), PermutationRank(ab));
    }
  }
  EXPECT_EQ(s4.generator_names, (std::vector<std::string>{"t", "c", "C"}));
  EXPECT_EQ(PermutationUnrank(4, s4.generators[0]),
            (std::vector<int>{1, 0, 2, 3}));
  EXPECT_EQ(PermutationUnrank(4, s4.generators[1]),
            (std::vector<int>{1, 2, 3, 0}));
}

TEST(Groups, DihedralRelations) {
  const GroupPreset d5 = DihedralGroup(5);
  const MultiplicationTable& t = d5.table;
  const int r = d5.generators[0];
  const int f = d5.generators[2];
  int p = t.identity();
  for (int i = 0; i < 5; ++i) p = t.Multiply(p, r);
  EXPECT_EQ(p, t.identity());
  EXPECT_EQ(t.Multiply(f, f), t.identity());
  EXPECT_EQ(t.Multiply(t.Multiply(f, r), f), t.Inverse(r));
}

TEST(Groups, DirectProductNames) {
  const GroupPreset g = ParseGroupPreset("z3*z4");
  EXPECT_EQ(g.generator_names,
            (std::vector<std::string>{"a", "A", "a2", "A2"}));
  EXPECT_EQ(ParseGroupPreset("z2*z3*z4").generator_names,
            (std::vector<std::string>{"a", "a2", "A2", "a22", "A22"}));
  const GroupPreset h = ParseGroupPreset("s4*z5");
  EXPECT_EQ(h.generator_names,
            (std::vector<std::string>{"t", "c", "C", "a", "A"}));
  // (x, y) has index x * 5 + y.
  EXPECT_EQ(h.table.Multiply(1 * 5 + 2, 0 * 5 + 4),
            SymmetricGroup(4).table.Multiply(1, 0) * 5 + 1);
}

TEST(Groups, BadSpecs) {
  for (const char* preset : {"", "q5", "z", "zz", "s9", "d1", "z0", "z3*"}) {
    EXPECT_THROW(ParseGroupPreset(preset), Error) << preset;
  }
}

}  // namespace
}  // namespace sofic
