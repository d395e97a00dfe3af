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

#ifndef SOFIC_EXPANSION_H_
#define SOFIC_EXPANSION_H_

#include <cstdint>
#include <span>
#include <vector>

#include "sofic/core_graph.h"

namespace sofic {

inline constexpr int kDefaultExhaustiveLimit = 24;
// Masks are 64-bit; beyond this the enumeration would never finish anyway.
inline constexpr int kHardExhaustiveLimit = 40;

// h(G) = min over nonempty S with |S| <= n/2 of |dS|/|S|, either exact or as a
// certified interval. The witness always attains `upper`.
struct CheegerEstimate {
  enum class Kind { kExact, kInterval };

  Kind kind = Kind::kExact;
  double lower = 0.0;
  double upper = 0.0;
  // Exact ratio of the witness as boundary / size.
  std::int64_t witness_boundary = 0;
  std::int64_t witness_size = 0;
  VertexSet witness;

  bool exact() const { return kind == Kind::kExact; }
  double value() const { return upper; }
};

// Second-largest eigenvalue of the averaging operator M = (1/d) sum_s P_s.
struct SpectralData {
  double lambda2 = 1.0;
  int iterations = 0;
  double residual = 0.0;  // ||M v - lambda2 v|| for the returned unit vector
  bool converged = false;
  std::vector<double> vector;  // mean-zero unit near-eigenvector
};

// out = M in. With d = 0, M is the identity.
void ApplyAveraging(const LabeledGraph& g, std::span<const double> in,
                    std::span<double> out);

// Exhaustive search with a Gray-code walk over subsets; ties go to the
// lexicographically smallest witness (as a sorted vertex list). `threads`
// splits the walk and merges deterministically.
// Throws kTooLargeForExhaustive when n > limit, kInvalidArgument when n < 2.
CheegerEstimate CheegerExact(const LabeledGraph& g,
                             int limit = kDefaultExhaustiveLimit,
                             int threads = 1);

// Power iteration on (I + M) / 2 over mean-zero vectors; the shift keeps the
// bottom of the spectrum (e.g. -1 on bipartite graphs) from winning. Stops when
// successive estimates differ by less than `tol`. On NoConvergence the best
// estimate is returned with converged = false.
SpectralData Lambda2(const LabeledGraph& g, double tol = 1e-10,
                     int max_iter = 10000, std::uint64_t seed = 1);

// lower = d (1 - lambda2) / 2 (made conservative by the residual),
// upper = best sweep cut of +/- sd.vector.
CheegerEstimate CheegerBounds(const LabeledGraph& g, const SpectralData& sd);

struct SweepCut {
  VertexSet set;
  std::int64_t boundary = 0;
  double ratio = 0.0;
};

// Vertices sorted by vec descending (ties by index); the prefix of size
// <= n/2 with the smallest |dP|/|P| wins, smallest prefix on ties.
// Throws kDegenerateVector when all entries are equal.
SweepCut SweepCutFromVector(const LabeledGraph& g, std::span<const double> vec);

}  // namespace sofic

#endif  // SOFIC_EXPANSION_H_
