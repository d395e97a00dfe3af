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

#include "sofic/clusters.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "sofic/error.h"

namespace sofic {

namespace {

bool WithinDelta(std::int64_t bad_edges, double delta, int n) {
  return static_cast<double>(bad_edges) <= delta * n + 1e-9;
}

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int Find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void Union(int a, int b) {
    a = Find(a);
    b = Find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

void RequireDeltaBijections(const LabeledGraph& g, double delta,
                            std::span<const VertexMap> maps) {
  for (std::size_t i = 0; i < maps.size(); ++i) {
    if (maps[i].size() != g.num_vertices()) {
      throw Error(ErrorCode::kLengthMismatch,
                  "map " + std::to_string(i) + " has the wrong length");
    }
    if (!maps[i].bijective()) {
      throw Error(ErrorCode::kNotBijective,
                  "map " + std::to_string(i) + " is not a bijection");
    }
    const std::int64_t bad = BadEdgeCount(g, maps[i]);
    if (!WithinDelta(bad, delta, g.num_vertices())) {
      throw Error(ErrorCode::kDefectTooLarge,
                  "map " + std::to_string(i) + " has " + std::to_string(bad) +
                      " bad edges, more than delta * n");
    }
  }
}

}  // namespace

std::int64_t Hamming(const VertexMap& a, const VertexMap& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kLengthMismatch, "maps have different lengths");
  }
  std::int64_t d = 0;
  for (Vertex x = 0; x < a.size(); ++x) d += a(x) != b(x);
  return d;
}

DichotomyReport DichotomyCheck(const LabeledGraph& g, double delta,
                               std::span<const VertexMap> maps, double h) {
  if (!(h > 0.0)) {
    throw Error(ErrorCode::kNonPositiveCheeger,
                "the dichotomy bound needs a positive Cheeger constant");
  }
  const int n = g.num_vertices();
  DichotomyReport report;
  report.bound = 2.0 * delta * n / h;
  for (std::size_t i = 0; i < maps.size(); ++i) {
    if (!WithinDelta(BadEdgeCount(g, maps[i]), delta, n)) {
      report.over_defect.push_back(static_cast<int>(i));
    }
  }
  for (std::size_t i = 0; i < maps.size(); ++i) {
    for (std::size_t j = i + 1; j < maps.size(); ++j) {
      ++report.pairs_checked;
      const std::int64_t dist = Hamming(maps[i], maps[j]);
      const double dd = static_cast<double>(dist);
      if (dd > report.bound && dd < n - report.bound) {
        report.violations.push_back(
            {static_cast<int>(i), static_cast<int>(j), dist});
      }
    }
  }
  return report;
}

std::vector<Cluster> ClusterMaps(const LabeledGraph& g, double delta,
                                 std::span<const VertexMap> maps) {
  RequireDeltaBijections(g, delta, maps);
  const int n = g.num_vertices();
  const int m = static_cast<int>(maps.size());
  std::vector<std::vector<std::int64_t>> dist(m, std::vector<std::int64_t>(m));
  DisjointSets sets(m);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      dist[i][j] = dist[j][i] = Hamming(maps[i], maps[j]);
      if (WithinFifth(dist[i][j], n)) sets.Union(i, j);
    }
  }
  std::map<int, std::vector<int>> classes;
  for (int i = 0; i < m; ++i) classes[sets.Find(i)].push_back(i);
  std::vector<Cluster> clusters;
  for (const auto& [root, idx] : classes) {
    for (std::size_t a = 0; a < idx.size(); ++a) {
      for (std::size_t b = a + 1; b < idx.size(); ++b) {
        if (!WithinFifth(dist[idx[a]][idx[b]], n)) {
          throw Error(ErrorCode::kStructureViolation,
                      "maps " + std::to_string(idx[a]) + " and " +
                          std::to_string(idx[b]) +
                          " are chained together but at Hamming distance " +
                          std::to_string(dist[idx[a]][idx[b]]) + " > n/5");
        }
      }
    }
    Cluster c;
    c.delta = delta;
    for (int i : idx) c.members.push_back(maps[i]);
    c.representative =
        *std::min_element(c.members.begin(), c.members.end());
    clusters.push_back(std::move(c));
  }
  std::sort(clusters.begin(), clusters.end(),
            [](const Cluster& a, const Cluster& b) {
              return a.representative < b.representative;
            });
  return clusters;
}

int ClusterGroup::Find(const VertexMap& c) const {
  for (int i = 0; i < order(); ++i) {
    const VertexMap& rep = clusters[i].representative;
    if (WithinFifth(Hamming(c, rep), rep.size())) return i;
  }
  return -1;
}

VertexMap ImproveToDelta(const LabeledGraph& g, const VertexMap& c,
                         double delta, const ImprovementConfig& cfg) {
  if (WithinDelta(BadEdgeCount(g, c), delta, g.num_vertices())) return c;
  return Improve(g, c, cfg).map;
}

ClusterGroup BuildClusterGroup(const LabeledGraph& g, double delta,
                               std::span<const VertexMap> seed_maps,
                               const ImprovementConfig& config,
                               const ClusterGroupOptions& options) {
  const int n = g.num_vertices();
  const ImprovementConfig cfg = ResolveConfig(g, config);
  auto alpha = [&](const VertexMap& c) {
    return ImproveToDelta(g, c, delta, cfg);
  };
  const int bound =
      options.closure_bound > 0
          ? options.closure_bound
          : 10 * std::max<int>(1, static_cast<int>(seed_maps.size()));

  std::vector<VertexMap> initial = {VertexMap::Identity(n)};
  initial.insert(initial.end(), seed_maps.begin(), seed_maps.end());
  ClusterGroup cg;
  cg.clusters = ClusterMaps(g, delta, initial);
  if (cg.order() > bound) {
    throw Error(ErrorCode::kClosureFailure,
                "seed clusters already exceed the closure bound");
  }

  // Gap condition: no two tracked delta-maps in the middle band.
  std::vector<VertexMap> tracked(initial);
  auto check_gap = [&](const VertexMap& c) {
    for (const VertexMap& other : tracked) {
      const std::int64_t d = Hamming(c, other);
      if (InMiddleBand(d, n)) {
        throw Error(ErrorCode::kHypothesisViolation,
                    "two delta-almost automorphisms at Hamming distance " +
                        std::to_string(d) + ", inside [n/5, 4n/5]");
      }
    }
    tracked.push_back(c);
  };
  for (std::size_t i = 0; i < initial.size(); ++i) {
    for (std::size_t j = i + 1; j < initial.size(); ++j) {
      const std::int64_t d = Hamming(initial[i], initial[j]);
      if (InMiddleBand(d, n)) {
        throw Error(ErrorCode::kHypothesisViolation,
                    "seed maps " + std::to_string(i) + " and " +
                        std::to_string(j) + " lie in the middle band");
      }
    }
  }

  // Place the improved map in a class, opening a new one when needed.
  auto classify = [&](const VertexMap& raw, const VertexMap& improved) {
    if (!WithinDelta(BadEdgeCount(g, improved), delta, n) ||
        !WithinFifth(Hamming(raw, improved), n)) {
      throw Error(ErrorCode::kHypothesisViolation,
                  "a 2delta-almost automorphism has no delta-almost "
                  "automorphism within n/5");
    }
    const int found = cg.Find(improved);
    if (found >= 0) {
      Cluster& cl = cg.clusters[found];
      if (std::find(cl.members.begin(), cl.members.end(), improved) ==
          cl.members.end()) {
        check_gap(improved);
        cl.members.push_back(improved);
      }
      return found;
    }
    check_gap(improved);
    if (cg.order() + 1 > bound) {
      throw Error(ErrorCode::kClosureFailure,
                  "cluster closure exceeded " + std::to_string(bound) +
                      " classes");
    }
    Cluster cl;
    cl.delta = delta;
    cl.representative = improved;
    cl.members.push_back(improved);
    cg.clusters.push_back(std::move(cl));
    return cg.order() - 1;
  };

  std::vector<std::vector<int>> table;
  for (int done = 0; done < cg.order();) {
    const int k = cg.order();
    table.resize(k);
    for (int i = 0; i < k; ++i) table[i].resize(k, -1);
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        if (i < done && j < done) continue;
        const VertexMap prod = Compose(cg.clusters[i].representative,
                                       cg.clusters[j].representative);
        table[i][j] = classify(prod, alpha(prod));
      }
    }
    done = k;
    if (cg.order() == k) break;
  }
  cg.table = std::move(table);

  cg.identity_index = cg.Find(VertexMap::Identity(n));
  const int k = cg.order();
  for (int i = 0; i < k; ++i) {
    if (cg.table[cg.identity_index][i] != i ||
        cg.table[i][cg.identity_index] != i) {
      throw Error(ErrorCode::kHypothesisViolation,
                  "identity class does not act as the identity");
    }
  }
  cg.inverse_map.assign(k, -1);
  for (int i = 0; i < k; ++i) {
    const VertexMap inv = Invert(cg.clusters[i].representative);
    const int j = cg.Find(alpha(inv));
    if (j < 0 || cg.table[i][j] != cg.identity_index ||
        cg.table[j][i] != cg.identity_index) {
      throw Error(ErrorCode::kHypothesisViolation,
                  "class " + std::to_string(i) + " has no two-sided inverse");
    }
    cg.inverse_map[i] = j;
  }
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      for (int c = 0; c < k; ++c) {
        if (cg.table[cg.table[a][b]][c] != cg.table[a][cg.table[b][c]]) {
          throw Error(ErrorCode::kHypothesisViolation,
                      "cluster product is not associative");
        }
      }
    }
  }
  if (options.check_associativity_distances) {
    std::vector<std::vector<VertexMap>> pair(k, std::vector<VertexMap>(k));
    for (int a = 0; a < k; ++a) {
      for (int b = 0; b < k; ++b) {
        pair[a][b] = alpha(Compose(cg.clusters[a].representative,
                                   cg.clusters[b].representative));
      }
    }
    for (int a = 0; a < k; ++a) {
      for (int b = 0; b < k; ++b) {
        for (int c = 0; c < k; ++c) {
          const VertexMap left =
              alpha(Compose(cg.clusters[a].representative, pair[b][c]));
          const VertexMap right =
              alpha(Compose(pair[a][b], cg.clusters[c].representative));
          if (5 * Hamming(left, right) > 4 * n) {
            throw Error(ErrorCode::kHypothesisViolation,
                        "associativity distance above 4n/5");
          }
        }
      }
    }
  }
  for (Cluster& cl : cg.clusters) {
    cl.representative = *std::min_element(cl.members.begin(), cl.members.end());
  }
  return cg;
}

GroupInvariants ComputeGroupInvariants(const ClusterGroup& cg) {
  GroupInvariants inv;
  inv.order = cg.order();
  for (int a = 0; a < inv.order; ++a) {
    int power = a, order = 1;
    while (power != cg.identity_index && order <= inv.order) {
      power = cg.table[power][a];
      ++order;
    }
    inv.element_orders.push_back(order);
    for (int b = 0; b < inv.order; ++b) {
      if (cg.table[a][b] != cg.table[b][a]) inv.abelian = false;
    }
  }
  std::sort(inv.element_orders.begin(), inv.element_orders.end());
  return inv;
}

LefCertificate CheckLef(const LabeledGraph& g,
                        std::span<const std::string> gamma_symbols,
                        std::span<const Word> f_words, double delta,
                        const ImprovementConfig& cfg,
                        const ClusterGroupOptions& options) {
  const int n = g.num_vertices();
  const LabeledGraph gamma = RestrictLabels(g, gamma_symbols);
  const std::set<std::string> gamma_set(gamma_symbols.begin(),
                                        gamma_symbols.end());
  LefCertificate cert;
  auto fail = [&](ErrorCode code, std::string why) {
    cert.certified = false;
    cert.failure = code;
    cert.violations.push_back(std::move(why));
    return cert;
  };

  std::vector<VertexMap> f_maps;
  std::set<std::vector<std::string>> seen;
  for (const Word& raw : f_words) {
    for (const std::string& letter : raw.letters) {
      g.generators().IndexOf(letter);
      if (gamma_set.contains(letter)) {
        throw Error(ErrorCode::kInvalidArgument,
                    "word letter '" + letter + "' is a gamma label");
      }
    }
    Word w = FreelyReduce(g.generators(), raw);
    w.expects_identity = true;
    if (!seen.insert(w.letters).second) continue;
    VertexMap m(WordAction(g, w));
    const std::int64_t bad = BadEdgeCount(gamma, m);
    cert.f_defects.push_back(n == 0 ? 0.0 : static_cast<double>(bad) / n);
    cert.f_words.push_back(w);
    if (!WithinDelta(bad, delta, n)) {
      return fail(ErrorCode::kDefectTooLarge,
                  "word '" + FormatWord(w) + "' has " + std::to_string(bad) +
                      " bad gamma-label edges");
    }
    f_maps.push_back(std::move(m));
  }

  try {
    cert.group = BuildClusterGroup(gamma, delta, f_maps, cfg, options);
  } catch (const Error& e) {
    return fail(e.code(), e.what());
  }
  cert.invariants = ComputeGroupInvariants(cert.group);
  const ImprovementConfig resolved = ResolveConfig(gamma, cfg);

  for (std::size_t i = 0; i < f_maps.size(); ++i) {
    cert.f_clusters.push_back(cert.group.Find(f_maps[i]));
  }
  for (std::size_t i = 0; i < f_maps.size(); ++i) {
    for (std::size_t j = i + 1; j < f_maps.size(); ++j) {
      if (cert.f_clusters[i] == cert.f_clusters[j]) {
        return fail(ErrorCode::kCollisionFailure,
                    "words '" + FormatWord(cert.f_words[i]) + "' and '" +
                        FormatWord(cert.f_words[j]) + "' share a cluster");
      }
    }
  }

  std::map<std::vector<std::string>, int> ff_index;
  for (std::size_t i = 0; i < f_maps.size(); ++i) {
    for (std::size_t j = 0; j < f_maps.size(); ++j) {
      Word xy;
      xy.letters = cert.f_words[i].letters;
      xy.letters.insert(xy.letters.end(), cert.f_words[j].letters.begin(),
                        cert.f_words[j].letters.end());
      xy = FreelyReduce(g.generators(), xy);
      const VertexMap raw(WordAction(g, xy));
      const int cls =
          cert.group.Find(ImproveToDelta(gamma, raw, delta, resolved));
      const int expected = cert.group.table[cert.f_clusters[i]][cert.f_clusters[j]];
      if (cls != expected) {
        return fail(ErrorCode::kMultiplicativityFailure,
                    "cluster of '" + FormatWord(xy) +
                        "' is not the product of the clusters of '" +
                        FormatWord(cert.f_words[i]) + "' and '" +
                        FormatWord(cert.f_words[j]) + "'");
      }
      if (ff_index.emplace(xy.letters, static_cast<int>(cert.ff_words.size()))
              .second) {
        cert.ff_words.push_back(xy);
        cert.ff_clusters.push_back(cls);
      }
    }
  }
  for (std::size_t i = 0; i < cert.ff_words.size(); ++i) {
    for (std::size_t j = i + 1; j < cert.ff_words.size(); ++j) {
      if (cert.ff_clusters[i] == cert.ff_clusters[j]) {
        return fail(ErrorCode::kCollisionFailure,
                    "products '" + FormatWord(cert.ff_words[i]) + "' and '" +
                        FormatWord(cert.ff_words[j]) + "' share a cluster");
      }
    }
  }
  cert.certified = true;
  return cert;
}

}  // namespace sofic
