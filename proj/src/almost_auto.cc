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

#include "sofic/almost_auto.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>

#include "sofic/error.h"
#include "sofic/expansion.h"

namespace sofic {

VertexMap::VertexMap(std::vector<Vertex> images) : images_(std::move(images)) {
  const int n = size();
  std::vector<char> hit(n, 0);
  for (Vertex y : images_) {
    if (y < 0 || y >= n) {
      throw Error(ErrorCode::kInvalidArgument,
                  "map image " + std::to_string(y) + " is not a vertex");
    }
    if (hit[y]) bijective_ = false;
    hit[y] = 1;
  }
}

VertexMap VertexMap::Identity(int n) {
  std::vector<Vertex> images(n);
  std::iota(images.begin(), images.end(), 0);
  return VertexMap(std::move(images));
}

VertexMap Compose(const VertexMap& c1, const VertexMap& c2) {
  if (c1.size() != c2.size()) {
    throw Error(ErrorCode::kLengthMismatch, "maps have different lengths");
  }
  std::vector<Vertex> images(c2.size());
  for (Vertex x = 0; x < c2.size(); ++x) images[x] = c1(c2(x));
  return VertexMap(std::move(images));
}

VertexMap Invert(const VertexMap& c) {
  if (!c.bijective()) {
    throw Error(ErrorCode::kNotBijective, "only bijections can be inverted");
  }
  std::vector<Vertex> images(c.size());
  for (Vertex x = 0; x < c.size(); ++x) images[c(x)] = x;
  return VertexMap(std::move(images));
}

namespace {

void CheckLength(const LabeledGraph& g, const VertexMap& c) {
  if (c.size() != g.num_vertices()) {
    throw Error(ErrorCode::kLengthMismatch,
                "map has " + std::to_string(c.size()) + " entries, graph has " +
                    std::to_string(g.num_vertices()) + " vertices");
  }
}

}  // namespace

std::int64_t BadEdgeCount(const LabeledGraph& g, const VertexMap& c) {
  CheckLength(g, c);
  const GeneratorSet& gens = g.generators();
  std::int64_t bad = 0;
  for (int s = 0; s < g.degree(); ++s) {
    if (!gens.IsCanonical(s)) continue;
    const Permutation& p = g.action(s);
    const bool involution = gens.IsSelfInverse(s);
    for (Vertex x = 0; x < g.num_vertices(); ++x) {
      if (involution && p[x] < x) continue;
      bad += c(p[x]) != p[c(x)];
    }
  }
  return bad;
}

DefectReport DefectOfMap(const LabeledGraph& g, const VertexMap& c) {
  DefectReport r;
  r.bad_edges = BadEdgeCount(g, c);
  const int n = g.num_vertices();
  r.epsilon = n == 0 ? 0.0 : static_cast<double>(r.bad_edges) / n;
  // (x, c(x)) in B has s-neighbor (s.x, s.c(x)), which lies in B iff
  // c(s.x) = s.c(x). Every boundary edge is seen once from its B endpoint.
  for (int s = 0; s < g.degree(); ++s) {
    const Permutation& p = g.action(s);
    for (Vertex x = 0; x < n; ++x) r.boundary_of_graph += c(p[x]) != p[c(x)];
  }
  r.simple = g.IsSimple();
  r.lemma_holds = r.boundary_of_graph == 2 * r.bad_edges;
  return r;
}

VertexSet GraphOfMap(const LabeledGraph& g, const VertexMap& c) {
  CheckLength(g, c);
  const std::int64_t n = g.num_vertices();
  VertexSet b(n * n);
  for (Vertex x = 0; x < n; ++x) b.Insert(ProductIndex(x, c(x), n));
  return b;
}

std::vector<VertexMap> ExactAutomorphisms(const LabeledGraph& g) {
  const int n = g.num_vertices();
  if (n == 0) return {};
  if (g.NumComponents() != 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "automorphism enumeration needs a connected graph");
  }
  std::vector<VertexMap> result;
  std::vector<Vertex> image(n), queue;
  std::vector<char> used(n);
  for (Vertex target = 0; target < n; ++target) {
    std::fill(image.begin(), image.end(), -1);
    image[0] = target;
    queue.assign(1, 0);
    bool ok = true;
    for (std::size_t head = 0; head < queue.size() && ok; ++head) {
      const Vertex x = queue[head];
      for (int s = 0; s < g.degree() && ok; ++s) {
        const Vertex sx = g.Apply(s, x);
        const Vertex want = g.Apply(s, image[x]);
        if (image[sx] == -1) {
          image[sx] = want;
          queue.push_back(sx);
        } else {
          ok = image[sx] == want;
        }
      }
    }
    if (!ok) continue;
    std::fill(used.begin(), used.end(), 0);
    for (Vertex y : image) {
      if (used[y]) ok = false;
      used[y] = 1;
    }
    if (ok) result.emplace_back(image);
  }
  std::sort(result.begin(), result.end());
  return result;
}

void ImprovementConfig::Validate() const {
  if (!(kappa > 0.0 && kappa <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "kappa must lie in (0, 1]");
  }
  if (alpha && !(*alpha > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "alpha must be positive");
  }
  if (radius < 0) throw Error(ErrorCode::kInvalidArgument, "radius must be >= 0");
  if (smoothing_steps < 1) {
    throw Error(ErrorCode::kInvalidArgument, "smoothing_steps must be >= 1");
  }
  if (!(target_delta >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "target_delta must be >= 0");
  }
}

ImprovementConfig ResolveConfig(const LabeledGraph& g, ImprovementConfig cfg) {
  cfg.Validate();
  if (!cfg.reference_ball) {
    if (g.num_vertices() == 0) {
      throw Error(ErrorCode::kInvalidArgument, "graph has no vertices");
    }
    cfg.reference_ball = MakeRootedBall(g, 0, cfg.radius);
  }
  if (!cfg.alpha) {
    double h_est = 0.0;
    if (g.num_vertices() >= 2) {
      h_est = CheegerBounds(g, Lambda2(g)).lower;
    }
    // Without measurable expansion only boundary-free U satisfy the target.
    cfg.alpha = h_est > 0.0 ? h_est / 4.0 : std::numeric_limits<double>::min();
  }
  return cfg;
}

ImprovementResult Improve(const LabeledGraph& g, const VertexMap& c,
                          const ImprovementConfig& config) {
  CheckLength(g, c);
  if (!c.bijective()) {
    throw Error(ErrorCode::kNotBijective, "improve needs a bijective map");
  }
  const ImprovementConfig cfg = ResolveConfig(g, config);
  const int n = g.num_vertices();
  const int d = g.degree();

  ImprovementResult result;
  ImprovementTrace& trace = result.trace;
  trace.alpha = *cfg.alpha;
  trace.initial = DefectOfMap(g, c);

  // Seed set: pairs of the map's graph whose product ball matches the model.
  const LabeledGraph product = ProductGraph(g, g);
  const std::int64_t big_n = product.num_vertices();
  const VertexSet b = GraphOfMap(g, c);
  const VertexSet good = GoodVertices(product, *cfg.reference_ball);
  trace.good_pairs = good.size();
  VertexSet t = b.Intersect(good);
  if (good.empty()) {
    trace.warnings.push_back(
        "no product vertex has a ball matching the reference; using T = B");
    t = b;
  }
  trace.t_size = t.size();
  trace.t_boundary = BoundaryCount(product, t);

  // Smooth the seed indicator with the averaging operator.
  std::vector<double> v(big_n, 0.0), next(big_n);
  for (std::int64_t p : t.Elements()) v[p] = 1.0;
  for (int step = 0; step < cfg.smoothing_steps; ++step) {
    ApplyAveraging(product, v, next);
    v.swap(next);
  }

  // Sweep for U: prefixes within the |T delta U| budget, preferring those
  // that meet the alpha target, then the smallest |P delta T|.
  const double budget_real =
      d == 0 ? 0.0
             : 5.0 * static_cast<double>(trace.t_boundary) /
                   (d * cfg.kappa * cfg.kappa);
  trace.budget = static_cast<std::int64_t>(std::floor(budget_real + 1e-9));
  std::vector<std::int64_t> order(big_n);
  std::iota(order.begin(), order.end(), 0);
  const std::int64_t scan =
      std::min<std::int64_t>(big_n - 1, trace.t_size + trace.budget);
  auto by_value = [&](std::int64_t a, std::int64_t b2) {
    return v[a] > v[b2] || (v[a] == v[b2] && a < b2);
  };
  if (scan + 1 < big_n) {
    std::partial_sort(order.begin(), order.begin() + scan + 1, order.end(),
                      by_value);
  } else {
    std::sort(order.begin(), order.end(), by_value);
  }

  struct Choice {
    std::int64_t k = 0, boundary = 0, diff = 0;
    bool meets_alpha = false;
  };
  auto better = [](const Choice& a, const Choice& o) {
    if (o.k == 0) return true;
    if (a.meets_alpha != o.meets_alpha) return a.meets_alpha;
    if (a.meets_alpha) {
      if (a.diff != o.diff) return a.diff < o.diff;
      if (a.boundary * o.k != o.boundary * a.k) {
        return a.boundary * o.k < o.boundary * a.k;
      }
      return false;
    }
    if (a.boundary * o.k != o.boundary * a.k) {
      return a.boundary * o.k < o.boundary * a.k;
    }
    return a.diff < o.diff;
  };
  Choice chosen;
  {
    std::vector<char> in(big_n, 0);
    std::int64_t boundary = 0, common = 0;
    for (std::int64_t k = 1; k <= scan; ++k) {
      const std::int64_t p = order[k - 1];
      for (int s = 0; s < d; ++s) {
        const std::int64_t q = product.Apply(s, static_cast<Vertex>(p));
        if (q != p) boundary += in[q] ? -1 : 1;
      }
      in[p] = 1;
      common += t.Contains(p);
      Choice cand;
      cand.k = k;
      cand.boundary = boundary;
      cand.diff = trace.t_size + k - 2 * common;
      if (cand.diff > trace.budget) continue;
      cand.meets_alpha = static_cast<double>(boundary) <= *cfg.alpha * k;
      if (better(cand, chosen)) chosen = cand;
    }
  }
  VertexSet u(big_n);
  if (chosen.k > 0) {
    trace.feasible_prefix = true;
    trace.alpha_attained = chosen.meets_alpha;
    for (std::int64_t k = 0; k < chosen.k; ++k) u.Insert(order[k]);
  } else {
    trace.warnings.push_back("no sweep prefix within the budget; using U = T");
    u = t;
    trace.alpha_attained =
        static_cast<double>(trace.t_boundary) <= *cfg.alpha * t.size();
  }
  trace.u_size = u.size();
  trace.u_boundary = BoundaryCount(product, u);
  trace.symmetric_difference = u.SymmetricDifferenceSize(t);

  // Fiber repair: keep the highest-valued pair in every overfull row and
  // column, then match empty rows to empty columns greedily.
  std::vector<Vertex> row(n, -1), col(n, -1);
  for (std::int64_t p : u.Elements()) {
    const Vertex x = static_cast<Vertex>(p / n);
    const Vertex y = static_cast<Vertex>(p % n);
    if (row[x] == -1 || v[p] > v[ProductIndex(x, row[x], n)]) row[x] = y;
  }
  for (Vertex x = 0; x < n; ++x) {
    if (row[x] == -1) continue;
    const Vertex y = row[x];
    const Vertex holder = col[y];
    if (holder == -1) {
      col[y] = x;
    } else if (v[ProductIndex(x, y, n)] > v[ProductIndex(holder, y, n)]) {
      row[holder] = -1;
      col[y] = x;
    } else {
      row[x] = -1;
    }
  }
  std::int64_t kept = 0;
  for (Vertex x = 0; x < n; ++x) kept += row[x] != -1;
  trace.removed_pairs = u.size() - kept;

  std::vector<Vertex> open_rows;
  for (Vertex x = 0; x < n; ++x) {
    if (row[x] == -1) open_rows.push_back(x);
  }
  const GeneratorSet& gens = g.generators();
  std::map<Vertex, int> score;
  while (!open_rows.empty()) {
    int best_score = 0;
    Vertex best_x = -1, best_y = -1;
    for (Vertex x : open_rows) {
      score.clear();
      for (int s = 0; s < d; ++s) {
        const Vertex sx = g.Apply(s, x);
        if (row[sx] == -1) continue;
        const Vertex y = g.Apply(gens.inverse(s), row[sx]);
        if (col[y] == -1) ++score[y];
      }
      for (const auto& [y, sc] : score) {
        if (sc > best_score) {
          best_score = sc;
          best_x = x;
          best_y = y;
        }
      }
    }
    if (best_x == -1) {
      best_x = open_rows.front();
      for (Vertex y = 0; y < n; ++y) {
        if (col[y] == -1) {
          best_y = y;
          break;
        }
      }
    }
    row[best_x] = best_y;
    col[best_y] = best_x;
    open_rows.erase(std::find(open_rows.begin(), open_rows.end(), best_x));
    ++trace.added_pairs;
  }
  trace.fibers_repaired = trace.removed_pairs + trace.added_pairs;

  // Read off c' and never hand back something worse than c.
  VertexMap improved(std::move(row));
  DefectReport final_report = DefectOfMap(g, improved);
  if (final_report.bad_edges > trace.initial.bad_edges) {
    trace.reverted = true;
    trace.warnings.push_back("pipeline result had more bad edges; kept input");
    result.map = c;
    trace.final = trace.initial;
  } else {
    result.map = std::move(improved);
    trace.final = final_report;
  }
  trace.hamming_moved = 0;
  for (Vertex x = 0; x < n; ++x) trace.hamming_moved += result.map(x) != c(x);
  if (trace.initial.bad_edges > 0) {
    trace.empirical_c = static_cast<double>(trace.hamming_moved) /
                        static_cast<double>(trace.initial.bad_edges);
  }
  trace.target_met = trace.final.epsilon <= cfg.target_delta;
  return result;
}

}  // namespace sofic
