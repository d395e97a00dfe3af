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

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <thread>

#include "sofic/error.h"
#include "sofic/random.h"

namespace sofic {

namespace {

// Non-loop neighbors of every vertex, one entry per incident labeled edge.
std::vector<std::vector<Vertex>> IncidentNeighbors(const LabeledGraph& g) {
  std::vector<std::vector<Vertex>> nbrs(g.num_vertices());
  for (Vertex x = 0; x < g.num_vertices(); ++x) {
    for (int s = 0; s < g.degree(); ++s) {
      const Vertex y = g.Apply(s, x);
      if (y != x) nbrs[x].push_back(y);
    }
  }
  return nbrs;
}

// Sorted-list lexicographic order on subsets encoded as bit masks.
bool LexLess(std::uint64_t a, std::uint64_t b) {
  if (a == b) return false;
  const int x = std::countr_zero(a ^ b);
  const std::uint64_t above = x == 63 ? 0 : ~((std::uint64_t{2} << x) - 1);
  if ((a >> x) & 1u) return (b & above) != 0;
  return (a & above) == 0;
}

struct Candidate {
  std::int64_t boundary = 0;
  std::int64_t size = 0;  // 0 = none yet
  std::uint64_t mask = 0;

  // Smaller ratio first, then the lexicographically smaller set.
  bool BetterThan(const Candidate& o) const {
    if (size == 0) return false;
    if (o.size == 0) return true;
    const std::int64_t lhs = boundary * o.size;
    const std::int64_t rhs = o.boundary * size;
    if (lhs != rhs) return lhs < rhs;
    return LexLess(mask, o.mask);
  }
};

// Enumerates all masks whose top `n - low_bits` bits equal `prefix`.
Candidate SearchBlock(const std::vector<std::vector<Vertex>>& nbrs, int n,
                      int low_bits, std::uint64_t prefix) {
  std::uint64_t mask = prefix << low_bits;
  std::int64_t size = std::popcount(mask);
  std::int64_t boundary = 0;
  for (int x = 0; x < n; ++x) {
    if (!((mask >> x) & 1u)) continue;
    for (Vertex y : nbrs[x]) boundary += !((mask >> y) & 1u);
  }
  Candidate best;
  auto consider = [&]() {
    if (size == 0 || 2 * size > n) return;
    Candidate c{boundary, size, mask};
    if (c.BetterThan(best)) best = c;
  };
  consider();
  const std::uint64_t steps = std::uint64_t{1} << low_bits;
  for (std::uint64_t i = 1; i < steps; ++i) {
    const int v = std::countr_zero(i);
    const std::uint64_t bit = std::uint64_t{1} << v;
    if (mask & bit) {
      mask ^= bit;
      --size;
      for (Vertex y : nbrs[v]) boundary += ((mask >> y) & 1u) ? 1 : -1;
    } else {
      for (Vertex y : nbrs[v]) boundary += ((mask >> y) & 1u) ? -1 : 1;
      mask ^= bit;
      ++size;
    }
    consider();
  }
  return best;
}

double Dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void SubtractMean(std::vector<double>& v) {
  const double mean = std::accumulate(v.begin(), v.end(), 0.0) / v.size();
  for (double& x : v) x -= mean;
}

}  // namespace

void ApplyAveraging(const LabeledGraph& g, std::span<const double> in,
                    std::span<double> out) {
  const int n = g.num_vertices();
  const int d = g.degree();
  if (d == 0) {
    std::copy(in.begin(), in.end(), out.begin());
    return;
  }
  const double inv_d = 1.0 / d;
  for (Vertex x = 0; x < n; ++x) {
    double sum = 0.0;
    for (int s = 0; s < d; ++s) sum += in[g.Apply(s, x)];
    out[x] = sum * inv_d;
  }
}

CheegerEstimate CheegerExact(const LabeledGraph& g, int limit, int threads) {
  const int n = g.num_vertices();
  if (n < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "the Cheeger constant needs at least two vertices");
  }
  if (n > std::min(limit, kHardExhaustiveLimit)) {
    throw Error(ErrorCode::kTooLargeForExhaustive,
                "graph has " + std::to_string(n) +
                    " vertices, above the exhaustive limit of " +
                    std::to_string(std::min(limit, kHardExhaustiveLimit)));
  }
  const auto nbrs = IncidentNeighbors(g);
  // Split on the top bits; each block is an independent Gray-code walk.
  int split = 0;
  while ((1 << split) < std::max(threads, 1) && split < n - 1 && split < 6) {
    ++split;
  }
  const int blocks = 1 << split;
  std::vector<Candidate> results(blocks);
  auto run = [&](int first, int stride) {
    for (int b = first; b < blocks; b += stride) {
      results[b] = SearchBlock(nbrs, n, n - split, static_cast<std::uint64_t>(b));
    }
  };
  if (threads <= 1 || blocks == 1) {
    run(0, 1);
  } else {
    std::vector<std::thread> pool;
    const int workers = std::min(threads, blocks);
    for (int t = 0; t < workers; ++t) pool.emplace_back(run, t, workers);
    for (std::thread& th : pool) th.join();
  }
  Candidate best;
  for (const Candidate& c : results) {
    if (c.BetterThan(best)) best = c;
  }
  CheegerEstimate est;
  est.kind = CheegerEstimate::Kind::kExact;
  est.witness_boundary = best.boundary;
  est.witness_size = best.size;
  est.lower = est.upper =
      static_cast<double>(best.boundary) / static_cast<double>(best.size);
  est.witness = VertexSet(n);
  for (int x = 0; x < n; ++x) {
    if ((best.mask >> x) & 1u) est.witness.Insert(x);
  }
  return est;
}

SpectralData Lambda2(const LabeledGraph& g, double tol, int max_iter,
                     std::uint64_t seed) {
  const int n = g.num_vertices();
  if (n < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "lambda2 needs at least two vertices");
  }
  SpectralData sd;
  std::vector<double> v(n), mv(n), w(n);
  Rng rng(seed);
  for (double& x : v) x = rng.Symmetric();
  SubtractMean(v);
  double norm = std::sqrt(Dot(v, v));
  if (norm == 0.0) {
    v[0] = 1.0;
    v[1] = -1.0;
    SubtractMean(v);
    norm = std::sqrt(Dot(v, v));
  }
  for (double& x : v) x /= norm;

  double previous = std::numeric_limits<double>::infinity();
  double estimate = 1.0;
  for (int it = 1; it <= max_iter; ++it) {
    ApplyAveraging(g, v, mv);
    for (int i = 0; i < n; ++i) w[i] = 0.5 * (v[i] + mv[i]);
    SubtractMean(w);
    // Rayleigh quotient of the shifted operator at the current unit vector.
    const double shifted = Dot(v, w);
    estimate = 2.0 * shifted - 1.0;
    sd.iterations = it;
    const double wnorm = std::sqrt(Dot(w, w));
    if (wnorm < 1e-300) {
      // v spans the -1 eigenspace of M.
      sd.converged = true;
      break;
    }
    if (std::abs(estimate - previous) < tol) {
      sd.converged = true;
      break;
    }
    previous = estimate;
    for (int i = 0; i < n; ++i) v[i] = w[i] / wnorm;
  }
  ApplyAveraging(g, v, mv);
  double r2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double r = mv[i] - estimate * v[i];
    r2 += r * r;
  }
  sd.lambda2 = std::clamp(estimate, -1.0, 1.0);
  sd.residual = std::sqrt(r2);
  sd.vector = std::move(v);
  return sd;
}

SweepCut SweepCutFromVector(const LabeledGraph& g, std::span<const double> vec) {
  const int n = g.num_vertices();
  if (static_cast<int>(vec.size()) != n) {
    throw Error(ErrorCode::kLengthMismatch, "vector length differs from n");
  }
  if (n < 2 || std::all_of(vec.begin(), vec.end(),
                           [&](double x) { return x == vec[0]; })) {
    throw Error(ErrorCode::kDegenerateVector,
                "sweep vector has no two distinct entries");
  }
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return vec[a] > vec[b]; });
  const auto nbrs = IncidentNeighbors(g);
  std::vector<char> in(n, 0);
  std::int64_t boundary = 0;
  std::int64_t best_boundary = 0;
  int best_size = 0;
  for (int k = 1; 2 * k <= n; ++k) {
    const Vertex v = order[k - 1];
    for (Vertex y : nbrs[v]) boundary += in[y] ? -1 : 1;
    in[v] = 1;
    if (best_size == 0 || boundary * best_size < best_boundary * k) {
      best_boundary = boundary;
      best_size = k;
    }
  }
  SweepCut cut;
  cut.set = VertexSet(n);
  for (int k = 0; k < best_size; ++k) cut.set.Insert(order[k]);
  cut.boundary = best_boundary;
  cut.ratio = static_cast<double>(best_boundary) / best_size;
  return cut;
}

CheegerEstimate CheegerBounds(const LabeledGraph& g, const SpectralData& sd) {
  const int n = g.num_vertices();
  const int d = g.degree();
  CheegerEstimate est;
  est.kind = CheegerEstimate::Kind::kInterval;
  const double lam = std::min(1.0, sd.lambda2 + sd.residual);
  est.lower = std::max(0.0, d * (1.0 - lam) / 2.0);

  SweepCut best;
  bool have = false;
  if (static_cast<int>(sd.vector.size()) == n) {
    std::vector<double> flipped(sd.vector);
    for (double& x : flipped) x = -x;
    for (const std::vector<double>* vec :
         std::initializer_list<const std::vector<double>*>{&sd.vector, &flipped}) {
      try {
        SweepCut cut = SweepCutFromVector(g, *vec);
        if (!have || cut.boundary * best.set.size() <
                         best.boundary * cut.set.size()) {
          best = std::move(cut);
          have = true;
        }
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kDegenerateVector) throw;
      }
    }
  }
  if (!have) {
    best.set = VertexSet(n);
    best.set.Insert(0);
    best.boundary = BoundaryCount(g, best.set);
    best.ratio = static_cast<double>(best.boundary);
  }
  est.witness_boundary = best.boundary;
  est.witness_size = best.set.size();
  est.upper = std::min(static_cast<double>(d), best.ratio);
  est.witness = std::move(best.set);
  return est;
}

}  // namespace sofic
