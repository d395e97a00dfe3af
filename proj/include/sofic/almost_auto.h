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

#ifndef SOFIC_ALMOST_AUTO_H_
#define SOFIC_ALMOST_AUTO_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sofic/core_graph.h"

namespace sofic {

// A self-map of 0..n-1; the candidate (almost) automorphism.
class VertexMap {
 public:
  VertexMap() = default;
  // Throws kInvalidArgument for images outside 0..n-1.
  explicit VertexMap(std::vector<Vertex> images);
  static VertexMap Identity(int n);

  int size() const { return static_cast<int>(images_.size()); }
  Vertex operator()(Vertex x) const { return images_[x]; }
  const std::vector<Vertex>& images() const { return images_; }
  bool bijective() const { return bijective_; }

  bool operator==(const VertexMap& o) const { return images_ == o.images_; }
  // Lexicographic on the image arrays.
  bool operator<(const VertexMap& o) const { return images_ < o.images_; }

 private:
  std::vector<Vertex> images_;
  bool bijective_ = true;
};

// (c1 o c2)(x) = c1(c2(x)). Throws kLengthMismatch.
VertexMap Compose(const VertexMap& c1, const VertexMap& c2);
// Throws kNotBijective.
VertexMap Invert(const VertexMap& c);

struct DefectReport {
  // Undirected labeled edges (x, s.x) with c(s.x) != s.c(x); loops included.
  std::int64_t bad_edges = 0;
  double epsilon = 0.0;  // bad_edges / n
  // |dB| for B = {(x, c(x))} inside G x G.
  std::int64_t boundary_of_graph = 0;
  bool simple = true;
  // boundary_of_graph == 2 * bad_edges. Guaranteed for simple graphs; a bad
  // loop of a self-inverse symbol contributes only one boundary edge.
  bool lemma_holds = true;
};

// Throws kLengthMismatch. The product graph is never materialized: each
// boundary edge of B is found from its endpoint (x, c(x)) inside B.
DefectReport DefectOfMap(const LabeledGraph& g, const VertexMap& c);
std::int64_t BadEdgeCount(const LabeledGraph& g, const VertexMap& c);

// B = {(x, c(x))} as a subset of ProductGraph(g, g). Throws kLengthMismatch.
VertexSet GraphOfMap(const LabeledGraph& g, const VertexMap& c);

struct ImprovementConfig {
  // Kazhdan constant; sets the |T delta U| budget 5 |dT| / (d kappa^2).
  double kappa = 0.5;
  // Target expansion |dU| <= alpha |U|; defaults to h_est / 4 with h_est the
  // spectral Cheeger lower bound of g.
  std::optional<double> alpha;
  int radius = 1;
  int smoothing_steps = 10;
  double target_delta = 0.0;
  // Model r-ball; defaults to the radius-ball of vertex 0 of g.
  std::optional<RootedBall> reference_ball;

  // Throws kInvalidArgument.
  void Validate() const;
};

// Fills in alpha and reference_ball.
ImprovementConfig ResolveConfig(const LabeledGraph& g, ImprovementConfig cfg);

struct ImprovementTrace {
  std::int64_t good_pairs = 0;  // |L|
  std::int64_t t_size = 0;
  std::int64_t t_boundary = 0;
  std::int64_t budget = 0;  // allowed |T delta U|
  std::int64_t u_size = 0;
  std::int64_t u_boundary = 0;
  std::int64_t symmetric_difference = 0;  // |T delta U|
  std::int64_t removed_pairs = 0;
  std::int64_t added_pairs = 0;
  std::int64_t fibers_repaired = 0;
  std::int64_t hamming_moved = 0;
  double alpha = 0.0;
  bool alpha_attained = false;
  bool feasible_prefix = false;
  bool reverted = false;
  bool target_met = false;
  // hamming_moved / (epsilon n) of the input, when the input has defects.
  std::optional<double> empirical_c;
  DefectReport initial;
  DefectReport final;
  std::vector<std::string> warnings;
};

struct ImprovementResult {
  VertexMap map;
  ImprovementTrace trace;
};

// Every label-preserving automorphism of a connected graph: fix the image of
// vertex 0 and propagate c(s.x) = s.c(x). Sorted lexicographically.
// Throws kInvalidArgument for disconnected graphs.
std::vector<VertexMap> ExactAutomorphisms(const LabeledGraph& g);

// Pipeline on G x G: seed T = pairs of the map's graph with model balls,
// smoothing v = M^t chi_T, a sweep
// over v for U near T, fiber repair back to a bijection. Never returns a map
// with more bad edges than c. Throws kNotBijective, kLengthMismatch.
// A final defect above target_delta is reported through trace.target_met.
ImprovementResult Improve(const LabeledGraph& g, const VertexMap& c,
                          const ImprovementConfig& cfg);

}  // namespace sofic

#endif  // SOFIC_ALMOST_AUTO_H_
