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

#include "sofic/expansion.h"

#include <gtest/gtest.h>

#include <random>

#include "sofic/error.h"
#include "sofic/groups.h"
#include "test_util.h"

namespace sofic {
namespace {

using testing::CirculantGraph;
using testing::CirculantSpectrum;
using testing::Cycle;

TEST(CheegerExact, Cycle6) {
  const CheegerEstimate est = CheegerExact(Cycle(6));
  EXPECT_TRUE(est.exact());
  EXPECT_DOUBLE_EQ(est.value(), 2.0 / 3.0);
  EXPECT_EQ(est.witness_boundary, 2);
  EXPECT_EQ(est.witness_size, 3);
  EXPECT_EQ(est.witness.Elements(), (std::vector<std::int64_t>{0, 1, 2}));
}

TEST(CheegerExact, CompleteGraphK4) {
  const CheegerEstimate est = CheegerExact(CirculantGraph(4, {1, 2, 3}));
  EXPECT_DOUBLE_EQ(est.value(), 2.0);
  // {0} already attains 3/1 > 2; {0, 1} is the first minimizer.
  EXPECT_EQ(est.witness.Elements(), (std::vector<std::int64_t>{0, 1}));
}

TEST(CheegerExact, MatchesSubsetOracle) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 11);
    const int inv = n % 2 == 0 ? static_cast<int>(rng() % 2) : 0;
    const LabeledGraph g = testing::RandomLabeledGraph(n, 1 + trial % 2, inv, rng);
    const testing::OracleCheeger oracle = testing::BruteForceCheeger(g);
    const CheegerEstimate est = CheegerExact(g);
    EXPECT_EQ(est.witness_boundary * oracle.size,
              oracle.boundary * est.witness_size)
        << "n=" << n;
    EXPECT_EQ(BoundaryCount(g, est.witness), est.witness_boundary);
    EXPECT_EQ(est.witness.size(), est.witness_size);
    EXPECT_LE(2 * est.witness_size, n);
  }
}

TEST(CheegerExact, ThreadsAgree) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    const LabeledGraph g = testing::RandomLabeledGraph(14, 2, 0, rng);
    const CheegerEstimate one = CheegerExact(g, 24, 1);
    const CheegerEstimate four = CheegerExact(g, 24, 4);
    EXPECT_EQ(one.witness, four.witness);
    EXPECT_EQ(one.witness_boundary, four.witness_boundary);
  }
}

TEST(CheegerExact, DisconnectedIsZero) {
  const CheegerEstimate est = CheegerExact(testing::CycleUnion({3, 4}));
  EXPECT_EQ(est.value(), 0.0);
  EXPECT_EQ(est.witness.Elements(), (std::vector<std::int64_t>{0, 1, 2}));
}

TEST(CheegerExact, Limits) {
  EXPECT_THROW(CheegerExact(Cycle(1)), Error);
  try {
    CheegerExact(Cycle(30));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooLargeForExhaustive);
  }
  try {
    CheegerExact(Cycle(50), 100);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooLargeForExhaustive);
  }
}

TEST(Lambda2, CirculantAnchors) {
  const std::vector<std::pair<int, std::vector<int>>> cases = {
      {6, {1, 5}},  {4, {1, 2, 3}}, {9, {1, 8}},
      {10, {1, 9, 3, 7}}, {12, {2, 10, 3, 9}}, {7, {1, 2, 3, 4, 5, 6}}};
  for (const auto& [n, steps] : cases) {
    const SpectralData sd = Lambda2(CirculantGraph(n, steps));
    EXPECT_TRUE(sd.converged);
    EXPECT_NEAR(sd.lambda2, CirculantSpectrum(n, steps)[1], 1e-8) << n;
  }
  EXPECT_NEAR(Lambda2(Cycle(6)).lambda2, 0.5, 1e-8);
  EXPECT_NEAR(Lambda2(CirculantGraph(4, {1, 2, 3})).lambda2, -1.0 / 3.0, 1e-8);
}

TEST(Lambda2, DisconnectedHasEigenvalueOne) {
  EXPECT_NEAR(Lambda2(testing::CycleUnion({5, 7})).lambda2, 1.0, 1e-8);
}

TEST(Lambda2, VectorIsMeanZeroUnit) {
  const SpectralData sd = Lambda2(SymmetricGroup(4).Cayley());
  double sum = 0.0, norm = 0.0;
  for (double x : sd.vector) {
    sum += x;
    norm += x * x;
  }
  EXPECT_NEAR(sum, 0.0, 1e-9);
  EXPECT_NEAR(norm, 1.0, 1e-9);
  EXPECT_LT(sd.residual, 1e-3);
}

TEST(Lambda2, SeedDoesNotChangeEigenvalue) {
  const LabeledGraph g = SymmetricGroup(4).Cayley();
  EXPECT_NEAR(Lambda2(g, 1e-12, 20000, 1).lambda2,
              Lambda2(g, 1e-12, 20000, 99).lambda2, 1e-6);
}

TEST(CheegerBounds, SandwichOnRandomGraphs) {
  std::mt19937 rng(29);
  int checked = 0;
  while (checked < 60) {
    const int n = 4 + static_cast<int>(rng() % 12);
    const LabeledGraph g = testing::RandomLabeledGraph(n, 1 + checked % 2, 0, rng);
    if (!testing::OracleConnected(g)) continue;
    ++checked;
    const CheegerEstimate bounds = CheegerBounds(g, Lambda2(g));
    const testing::OracleCheeger h = testing::BruteForceCheeger(g);
    EXPECT_FALSE(bounds.exact());
    EXPECT_LE(bounds.lower, h.value + 1e-12);
    EXPECT_GE(bounds.upper, h.value - 1e-12);
    EXPECT_EQ(BoundaryCount(g, bounds.witness), bounds.witness_boundary);
  }
}

TEST(SweepCut, PicksBestPrefix) {
  const LabeledGraph g = Cycle(8);
  const std::vector<double> vec = {4, 3, 2, 1, 0, -1, -2, -3};
  const SweepCut cut = SweepCutFromVector(g, vec);
  EXPECT_EQ(cut.set.Elements(), (std::vector<std::int64_t>{0, 1, 2, 3}));
  EXPECT_EQ(cut.boundary, 2);
  EXPECT_DOUBLE_EQ(cut.ratio, 0.5);
}

TEST(SweepCut, Errors) {
  const LabeledGraph g = Cycle(4);
  const std::vector<double> flat = {1, 1, 1, 1};
  const std::vector<double> short_vec = {1, 2};
  try {
    SweepCutFromVector(g, flat);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDegenerateVector);
  }
  try {
    SweepCutFromVector(g, short_vec);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kLengthMismatch);
  }
}

TEST(ApplyAveraging, ConstantIsFixed) {
  const LabeledGraph g = SymmetricGroup(3).Cayley();
  const std::vector<double> ones(6, 1.0);
  std::vector<double> out(6);
  ApplyAveraging(g, ones, out);
  for (double x : out) EXPECT_DOUBLE_EQ(x, 1.0);
}

}  // namespace
}  // namespace sofic
