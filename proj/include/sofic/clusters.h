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

#ifndef SOFIC_CLUSTERS_H_
#define SOFIC_CLUSTERS_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sofic/almost_auto.h"
#include "sofic/core_graph.h"
#include "sofic/error.h"
#include "sofic/sofic_report.h"

namespace sofic {

// Number of positions where the two maps disagree. Throws kLengthMismatch.
std::int64_t Hamming(const VertexMap& a, const VertexMap& b);

// "Close" means d_H <= n/5; the forbidden middle band is n/5 <= d_H <= 4n/5.
inline bool WithinFifth(std::int64_t distance, std::int64_t n) {
  return 5 * distance <= n;
}
inline bool InMiddleBand(std::int64_t distance, std::int64_t n) {
  return n <= 5 * distance && 5 * distance <= 4 * n;
}

struct DichotomyViolation {
  int first = 0;
  int second = 0;
  std::int64_t distance = 0;
};

struct DichotomyReport {
  double bound = 0.0;  // 2 delta n / h
  std::int64_t pairs_checked = 0;
  std::vector<DichotomyViolation> violations;
  // Maps whose defect exceeds delta n, so the bound does not apply to them.
  std::vector<int> over_defect;

  bool ok() const { return violations.empty() && over_defect.empty(); }
};

// Every pair must satisfy d_H <= 2 delta n / h or d_H >= n - 2 delta n / h.
// Throws kNonPositiveCheeger for h <= 0.
DichotomyReport DichotomyCheck(const LabeledGraph& g, double delta,
                               std::span<const VertexMap> maps, double h);

struct Cluster {
  VertexMap representative;  // lexicographically smallest member
  std::vector<VertexMap> members;
  double delta = 0.0;
};

// Partitions bijective delta-almost automorphisms by chains of d_H <= n/5 and
// then verifies every pair inside a class is itself within n/5
// (kStructureViolation otherwise). Clusters come back sorted by
// representative. Throws kNotBijective, kDefectTooLarge.
std::vector<Cluster> ClusterMaps(const LabeledGraph& g, double delta,
                                 std::span<const VertexMap> maps);

struct ClusterGroup {
  std::vector<Cluster> clusters;
  std::vector<std::vector<int>> table;  // table[a][b] = class of alpha(a b)
  int identity_index = 0;
  std::vector<int> inverse_map;

  int order() const { return static_cast<int>(clusters.size()); }
  // Index of the cluster whose representative is within n/5 of c, or -1.
  int Find(const VertexMap& c) const;
};

struct ClusterGroupOptions {
  // 0 means 10 * max(1, |seed_maps|).
  int closure_bound = 0;
  // d_H(alpha(a alpha(bc)), alpha(alpha(ab) c)) <= 4n/5 for all triples.
  bool check_associativity_distances = true;
};

// The improvement map alpha: c itself when it already has at most delta n bad
// edges, Improve(g, c, cfg) otherwise.
VertexMap ImproveToDelta(const LabeledGraph& g, const VertexMap& c,
                         double delta, const ImprovementConfig& cfg);

// Closes the classes of the seeds (plus the identity) under
// cls(a) cls(b) = cls(alpha(a b)) and verifies the group axioms at runtime.
// Throws kClosureFailure, kHypothesisViolation, kStructureViolation,
// kDefectTooLarge, kNotBijective.
ClusterGroup BuildClusterGroup(const LabeledGraph& g, double delta,
                               std::span<const VertexMap> seed_maps,
                               const ImprovementConfig& cfg,
                               const ClusterGroupOptions& options = {});

struct GroupInvariants {
  int order = 0;
  std::vector<int> element_orders;  // sorted ascending
  bool abelian = true;
};

GroupInvariants ComputeGroupInvariants(const ClusterGroup& cg);

// Finite certificate that the words F over the non-gamma labels embed
// multiplicatively into the cluster group of G restricted to the gamma labels.
struct LefCertificate {
  bool certified = false;
  ErrorCode failure = ErrorCode::kInvalidArgument;  // valid when !certified
  std::vector<std::string> violations;

  std::vector<Word> f_words;  // freely reduced
  std::vector<int> f_clusters;
  std::vector<double> f_defects;  // epsilon on the gamma-label edges
  std::vector<Word> ff_words;     // distinct reduced products xy
  std::vector<int> ff_clusters;
  ClusterGroup group;
  GroupInvariants invariants;
};

// Runs the whole check and reports failures (kDefectTooLarge,
// kCollisionFailure, kMultiplicativityFailure, or an error raised while
// building the cluster group) in the certificate. Malformed input still
// throws: unknown symbols, words using gamma letters, gamma labels not
// inverse-closed.
LefCertificate CheckLef(const LabeledGraph& g,
                        std::span<const std::string> gamma_symbols,
                        std::span<const Word> f_words, double delta,
                        const ImprovementConfig& cfg,
                        const ClusterGroupOptions& options = {});

}  // namespace sofic

#endif  // SOFIC_CLUSTERS_H_
