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

#include "sofic/core_graph.h"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>
#include <utility>

#include "sofic/error.h"

namespace sofic {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kNotAPermutation: return "NotAPermutation";
    case ErrorCode::kInversePairMismatch: return "InversePairMismatch";
    case ErrorCode::kNotInverseClosed: return "NotInverseClosed";
    case ErrorCode::kInvalidTable: return "InvalidTable";
    case ErrorCode::kGeneratorSetMismatch: return "GeneratorSetMismatch";
    case ErrorCode::kUnknownSymbol: return "UnknownSymbol";
    case ErrorCode::kTooLargeForExhaustive: return "TooLargeForExhaustive";
    case ErrorCode::kDegenerateVector: return "DegenerateVector";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kNotBijective: return "NotBijective";
    case ErrorCode::kNonPositiveCheeger: return "NonPositiveCheeger";
    case ErrorCode::kStructureViolation: return "StructureViolation";
    case ErrorCode::kClosureFailure: return "ClosureFailure";
    case ErrorCode::kHypothesisViolation: return "HypothesisViolation";
    case ErrorCode::kDefectTooLarge: return "DefectTooLarge";
    case ErrorCode::kCollisionFailure: return "CollisionFailure";
    case ErrorCode::kMultiplicativityFailure: return "MultiplicativityFailure";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// GeneratorSet

GeneratorSet GeneratorSet::Create(std::vector<std::string> names,
                                  std::vector<int> inverse) {
  const int d = static_cast<int>(names.size());
  if (static_cast<int>(inverse.size()) != d) {
    throw Error(ErrorCode::kInvalidArgument,
                "inverse pairing must cover every symbol");
  }
  std::set<std::string> seen;
  for (const std::string& name : names) {
    if (name.empty()) {
      throw Error(ErrorCode::kInvalidArgument, "empty generator name");
    }
    if (!seen.insert(name).second) {
      throw Error(ErrorCode::kInvalidArgument,
                  "duplicate generator name '" + name + "'");
    }
  }
  for (int s = 0; s < d; ++s) {
    const int t = inverse[s];
    if (t < 0 || t >= d || inverse[t] != s) {
      throw Error(ErrorCode::kInvalidArgument,
                  "inverse pairing is not an involution at '" + names[s] + "'");
    }
  }
  GeneratorSet result;
  result.names_ = std::move(names);
  result.inverse_ = std::move(inverse);
  return result;
}

GeneratorSet GeneratorSet::FromInverseNames(
    const std::vector<std::pair<std::string, std::string>>& entries) {
  std::vector<std::string> names;
  std::map<std::string, int> index;
  // Listed names keep their order; names seen only as inverses go last.
  for (const auto& [name, inv] : entries) {
    if (index.emplace(name, static_cast<int>(names.size())).second) {
      names.push_back(name);
    }
  }
  for (const auto& [name, inv] : entries) {
    if (index.emplace(inv, static_cast<int>(names.size())).second) {
      names.push_back(inv);
    }
  }
  std::vector<int> inverse(names.size(), -1);
  for (const auto& [name, inv] : entries) {
    auto it = index.find(inv);
    if (it == index.end()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "inverse '" + inv + "' of '" + name + "' is not a generator");
    }
    const int s = index.at(name);
    if (inverse[s] != -1 && inverse[s] != it->second) {
      throw Error(ErrorCode::kInvalidArgument,
                  "conflicting inverses for '" + name + "'");
    }
    inverse[s] = it->second;
  }
  // Pairs listed from one side only.
  for (int s = 0; s < static_cast<int>(names.size()); ++s) {
    if (inverse[s] != -1 && inverse[inverse[s]] == -1) {
      inverse[inverse[s]] = s;
    }
  }
  return Create(std::move(names), std::move(inverse));
}

std::optional<int> GeneratorSet::Find(std::string_view name) const {
  for (int s = 0; s < size(); ++s) {
    if (names_[s] == name) return s;
  }
  return std::nullopt;
}

int GeneratorSet::IndexOf(std::string_view name) const {
  auto s = Find(name);
  if (!s) {
    throw Error(ErrorCode::kUnknownSymbol,
                "unknown generator symbol '" + std::string(name) + "'");
  }
  return *s;
}

// ---------------------------------------------------------------------------
// VertexSet

VertexSet::VertexSet(std::int64_t universe)
    : universe_(universe), bits_((universe + 63) / 64, 0) {}

VertexSet VertexSet::FromElements(std::int64_t universe,
                                  std::span<const std::int64_t> elements) {
  VertexSet s(universe);
  for (std::int64_t v : elements) s.Insert(v);
  return s;
}

VertexSet VertexSet::Full(std::int64_t universe) {
  VertexSet s(universe);
  for (std::int64_t v = 0; v < universe; ++v) s.Insert(v);
  return s;
}

void VertexSet::Insert(std::int64_t v) {
  if (v < 0 || v >= universe_) {
    throw Error(ErrorCode::kInvalidArgument, "vertex out of range");
  }
  std::uint64_t& word = bits_[v >> 6];
  const std::uint64_t mask = std::uint64_t{1} << (v & 63);
  if (!(word & mask)) {
    word |= mask;
    ++size_;
  }
}

void VertexSet::Erase(std::int64_t v) {
  if (v < 0 || v >= universe_) {
    throw Error(ErrorCode::kInvalidArgument, "vertex out of range");
  }
  std::uint64_t& word = bits_[v >> 6];
  const std::uint64_t mask = std::uint64_t{1} << (v & 63);
  if (word & mask) {
    word &= ~mask;
    --size_;
  }
}

VertexSet VertexSet::Complement() const {
  VertexSet result(universe_);
  for (std::size_t i = 0; i < bits_.size(); ++i) result.bits_[i] = ~bits_[i];
  if (universe_ & 63) {
    result.bits_.back() &= (std::uint64_t{1} << (universe_ & 63)) - 1;
  }
  result.size_ = universe_ - size_;
  return result;
}

VertexSet VertexSet::Intersect(const VertexSet& other) const {
  if (other.universe_ != universe_) {
    throw Error(ErrorCode::kLengthMismatch, "vertex set universes differ");
  }
  VertexSet result(universe_);
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    result.bits_[i] = bits_[i] & other.bits_[i];
    result.size_ += std::popcount(result.bits_[i]);
  }
  return result;
}

std::int64_t VertexSet::SymmetricDifferenceSize(const VertexSet& other) const {
  if (other.universe_ != universe_) {
    throw Error(ErrorCode::kLengthMismatch, "vertex set universes differ");
  }
  std::int64_t count = 0;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    count += std::popcount(bits_[i] ^ other.bits_[i]);
  }
  return count;
}

std::vector<std::int64_t> VertexSet::Elements() const {
  std::vector<std::int64_t> out;
  out.reserve(size_);
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    std::uint64_t word = bits_[i];
    while (word) {
      out.push_back(static_cast<std::int64_t>(i) * 64 + std::countr_zero(word));
      word &= word - 1;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// LabeledGraph

LabeledGraph LabeledGraph::Create(int n, GeneratorSet generators,
                                  std::vector<Permutation> actions) {
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "negative vertex count");
  if (static_cast<int>(actions.size()) != generators.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "need exactly one permutation per generator symbol");
  }
  std::vector<char> hit(n);
  for (int s = 0; s < generators.size(); ++s) {
    const Permutation& p = actions[s];
    if (static_cast<int>(p.size()) != n) {
      throw Error(ErrorCode::kLengthMismatch,
                  "action of '" + generators.name(s) + "' has wrong length");
    }
    std::fill(hit.begin(), hit.end(), 0);
    for (Vertex y : p) {
      if (y < 0 || y >= n || hit[y]) {
        throw Error(ErrorCode::kNotAPermutation,
                    "action of '" + generators.name(s) +
                        "' is not a permutation of the vertex set");
      }
      hit[y] = 1;
    }
  }
  for (int s = 0; s < generators.size(); ++s) {
    const Permutation& p = actions[s];
    const Permutation& q = actions[generators.inverse(s)];
    for (Vertex x = 0; x < n; ++x) {
      if (q[p[x]] != x) {
        throw Error(ErrorCode::kInversePairMismatch,
                    "action of '" + generators.name(generators.inverse(s)) +
                        "' is not the inverse of '" + generators.name(s) + "'");
      }
    }
  }
  LabeledGraph g;
  g.n_ = n;
  g.generators_ = std::move(generators);
  g.actions_ = std::move(actions);
  return g;
}

bool LabeledGraph::HasLoops() const {
  for (const Permutation& p : actions_) {
    for (Vertex x = 0; x < n_; ++x) {
      if (p[x] == x) return true;
    }
  }
  return false;
}

bool LabeledGraph::IsSimple() const {
  // Each labeled edge at x is reached by exactly one symbol from x, so the
  // graph is simple iff the neighbors s.x over all s are distinct from each
  // other and from x.
  std::vector<Vertex> nbrs;
  for (Vertex x = 0; x < n_; ++x) {
    nbrs.clear();
    for (const Permutation& p : actions_) {
      if (p[x] == x) return false;
      nbrs.push_back(p[x]);
    }
    std::sort(nbrs.begin(), nbrs.end());
    if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end()) {
      return false;
    }
  }
  return true;
}

std::vector<int> LabeledGraph::ComponentLabels() const {
  std::vector<int> label(n_, -1);
  std::vector<Vertex> stack;
  int next = 0;
  for (Vertex root = 0; root < n_; ++root) {
    if (label[root] != -1) continue;
    label[root] = next;
    stack.push_back(root);
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      for (const Permutation& p : actions_) {
        const Vertex y = p[x];
        if (label[y] == -1) {
          label[y] = next;
          stack.push_back(y);
        }
      }
    }
    ++next;
  }
  return label;
}

int LabeledGraph::NumComponents() const {
  const std::vector<int> labels = ComponentLabels();
  return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

std::vector<Edge> LabeledGraph::Edges() const {
  std::vector<Edge> edges;
  for (int s = 0; s < degree(); ++s) {
    if (!generators_.IsCanonical(s)) continue;
    const Permutation& p = actions_[s];
    const bool involution = generators_.IsSelfInverse(s);
    for (Vertex x = 0; x < n_; ++x) {
      if (involution && p[x] < x) continue;
      edges.push_back({x, p[x], s});
    }
  }
  return edges;
}

std::int64_t LabeledGraph::NumEdges() const {
  std::int64_t count = 0;
  for (int s = 0; s < degree(); ++s) {
    if (!generators_.IsCanonical(s)) continue;
    if (!generators_.IsSelfInverse(s)) {
      count += n_;
      continue;
    }
    for (Vertex x = 0; x < n_; ++x) count += actions_[s][x] >= x;
  }
  return count;
}

std::int64_t BoundaryCount(const LabeledGraph& g, const VertexSet& s) {
  if (s.universe() != g.num_vertices()) {
    throw Error(ErrorCode::kLengthMismatch,
                "vertex set does not match the graph");
  }
  std::int64_t count = 0;
  const GeneratorSet& gens = g.generators();
  for (int label = 0; label < g.degree(); ++label) {
    if (!gens.IsCanonical(label)) continue;
    const Permutation& p = g.action(label);
    if (gens.IsSelfInverse(label)) {
      // Each crossing 2-orbit is seen once, from its inside endpoint.
      for (Vertex x = 0; x < g.num_vertices(); ++x) {
        if (s.Contains(x) && !s.Contains(p[x])) ++count;
      }
    } else {
      for (Vertex x = 0; x < g.num_vertices(); ++x) {
        if (s.Contains(x) != s.Contains(p[x])) ++count;
      }
    }
  }
  return count;
}

BoundaryResult Boundary(const LabeledGraph& g, const VertexSet& s) {
  if (s.universe() != g.num_vertices()) {
    throw Error(ErrorCode::kLengthMismatch,
                "vertex set does not match the graph");
  }
  BoundaryResult result;
  for (const Edge& e : g.Edges()) {
    if (e.from != e.to && s.Contains(e.from) != s.Contains(e.to)) {
      result.edges.push_back(e);
    }
  }
  result.count = static_cast<std::int64_t>(result.edges.size());
  return result;
}

// ---------------------------------------------------------------------------
// MultiplicationTable and Cayley graphs

MultiplicationTable MultiplicationTable::Create(
    std::vector<std::vector<int>> rows, bool check_associativity) {
  const int order = static_cast<int>(rows.size());
  if (order == 0) throw Error(ErrorCode::kInvalidTable, "empty table");
  MultiplicationTable t;
  t.order_ = order;
  t.table_.resize(static_cast<std::size_t>(order) * order);
  std::vector<char> seen(order);
  for (int a = 0; a < order; ++a) {
    if (static_cast<int>(rows[a].size()) != order) {
      throw Error(ErrorCode::kInvalidTable, "table is not square");
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (int b = 0; b < order; ++b) {
      const int c = rows[a][b];
      if (c < 0 || c >= order || seen[c]) {
        throw Error(ErrorCode::kInvalidTable,
                    "row " + std::to_string(a) + " is not a permutation");
      }
      seen[c] = 1;
      t.table_[a * order + b] = c;
    }
  }
  for (int b = 0; b < order; ++b) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int a = 0; a < order; ++a) {
      const int c = t.table_[a * order + b];
      if (seen[c]) {
        throw Error(ErrorCode::kInvalidTable,
                    "column " + std::to_string(b) + " is not a permutation");
      }
      seen[c] = 1;
    }
  }
  int identity = -1;
  for (int e = 0; e < order && identity < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < order && ok; ++a) {
      ok = t.Multiply(e, a) == a && t.Multiply(a, e) == a;
    }
    if (ok) identity = e;
  }
  if (identity < 0) throw Error(ErrorCode::kInvalidTable, "no identity element");
  t.identity_ = identity;
  t.inverse_.assign(order, -1);
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      if (t.Multiply(a, b) == identity) t.inverse_[a] = b;
    }
    if (t.Multiply(t.inverse_[a], a) != identity) {
      throw Error(ErrorCode::kInvalidTable, "left and right inverses differ");
    }
  }
  if (check_associativity && !t.IsAssociative()) {
    throw Error(ErrorCode::kInvalidTable, "table is not associative");
  }
  return t;
}

bool MultiplicationTable::IsAssociative() const {
  for (int a = 0; a < order_; ++a) {
    for (int b = 0; b < order_; ++b) {
      const int ab = Multiply(a, b);
      for (int c = 0; c < order_; ++c) {
        if (Multiply(ab, c) != Multiply(a, Multiply(b, c))) return false;
      }
    }
  }
  return true;
}

bool MultiplicationTable::IsAbelian() const {
  for (int a = 0; a < order_; ++a) {
    for (int b = a + 1; b < order_; ++b) {
      if (Multiply(a, b) != Multiply(b, a)) return false;
    }
  }
  return true;
}

std::vector<std::vector<int>> MultiplicationTable::Rows() const {
  std::vector<std::vector<int>> rows(order_);
  for (int a = 0; a < order_; ++a) {
    rows[a].assign(table_.begin() + a * order_,
                   table_.begin() + (a + 1) * order_);
  }
  return rows;
}

LabeledGraph CayleyGraph(const MultiplicationTable& table,
                         std::span<const int> gen_indices,
                         std::vector<std::string> names) {
  const int d = static_cast<int>(gen_indices.size());
  if (names.empty()) {
    for (int g : gen_indices) names.push_back("g" + std::to_string(g));
  }
  if (static_cast<int>(names.size()) != d) {
    throw Error(ErrorCode::kInvalidArgument,
                "one name per generator is required");
  }
  std::map<int, int> position;
  for (int i = 0; i < d; ++i) {
    const int g = gen_indices[i];
    if (g < 0 || g >= table.order()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "generator " + std::to_string(g) + " is not a group element");
    }
    if (!position.emplace(g, i).second) {
      throw Error(ErrorCode::kInvalidArgument,
                  "generator " + std::to_string(g) + " listed twice");
    }
  }
  std::vector<int> inverse(d);
  for (int i = 0; i < d; ++i) {
    auto it = position.find(table.Inverse(gen_indices[i]));
    if (it == position.end()) {
      throw Error(ErrorCode::kNotInverseClosed,
                  "inverse of generator " + std::to_string(gen_indices[i]) +
                      " is missing");
    }
    inverse[i] = it->second;
  }
  std::vector<Permutation> actions(d, Permutation(table.order()));
  for (int i = 0; i < d; ++i) {
    for (int x = 0; x < table.order(); ++x) {
      actions[i][x] = table.Multiply(gen_indices[i], x);
    }
  }
  return LabeledGraph::Create(
      table.order(), GeneratorSet::Create(std::move(names), std::move(inverse)),
      std::move(actions));
}

LabeledGraph ProductGraph(const LabeledGraph& g, const LabeledGraph& h) {
  if (!(g.generators() == h.generators())) {
    throw Error(ErrorCode::kGeneratorSetMismatch,
                "product factors must share the generator set");
  }
  const std::int64_t n64 =
      static_cast<std::int64_t>(g.num_vertices()) * h.num_vertices();
  if (n64 > (std::int64_t{1} << 31) - 1) {
    throw Error(ErrorCode::kInvalidArgument, "product graph is too large");
  }
  const int m = h.num_vertices();
  std::vector<Permutation> actions(g.degree(), Permutation(n64));
  for (int s = 0; s < g.degree(); ++s) {
    const Permutation& p = g.action(s);
    const Permutation& q = h.action(s);
    for (Vertex x = 0; x < g.num_vertices(); ++x) {
      for (Vertex y = 0; y < m; ++y) {
        actions[s][ProductIndex(x, y, m)] =
            static_cast<Vertex>(ProductIndex(p[x], q[y], m));
      }
    }
  }
  return LabeledGraph::Create(static_cast<int>(n64), g.generators(),
                              std::move(actions));
}

LabeledGraph RestrictLabels(const LabeledGraph& g,
                            std::span<const std::string> symbols) {
  const GeneratorSet& gens = g.generators();
  std::vector<int> picked;
  for (const std::string& name : symbols) picked.push_back(gens.IndexOf(name));
  std::map<int, int> position;
  for (int i = 0; i < static_cast<int>(picked.size()); ++i) {
    if (!position.emplace(picked[i], i).second) {
      throw Error(ErrorCode::kInvalidArgument,
                  "symbol '" + gens.name(picked[i]) + "' listed twice");
    }
  }
  std::vector<std::string> names;
  std::vector<int> inverse;
  std::vector<Permutation> actions;
  for (int s : picked) {
    auto it = position.find(gens.inverse(s));
    if (it == position.end()) {
      throw Error(ErrorCode::kNotInverseClosed,
                  "inverse of '" + gens.name(s) + "' is not selected");
    }
    names.push_back(gens.name(s));
    inverse.push_back(it->second);
    actions.push_back(g.action(s));
  }
  return LabeledGraph::Create(
      g.num_vertices(), GeneratorSet::Create(std::move(names), std::move(inverse)),
      std::move(actions));
}

// ---------------------------------------------------------------------------
// Rooted balls

namespace {

// BFS scratch space reused across many ball computations on one graph.
class BallBuilder {
 public:
  explicit BallBuilder(const LabeledGraph& g)
      : g_(g), local_(g.num_vertices(), -1), depth_(g.num_vertices(), 0) {}

  void Build(Vertex root, int radius, RootedBall* ball) {
    const int d = g_.degree();
    ball->radius = radius;
    ball->vertices.clear();
    ball->table.clear();
    ball->vertices.push_back(root);
    local_[root] = 0;
    depth_[root] = 0;
    for (std::size_t head = 0; head < ball->vertices.size(); ++head) {
      const Vertex x = static_cast<Vertex>(ball->vertices[head]);
      if (depth_[x] == radius) continue;
      for (int s = 0; s < d; ++s) {
        const Vertex y = g_.Apply(s, x);
        if (local_[y] == -1) {
          local_[y] = static_cast<std::int32_t>(ball->vertices.size());
          depth_[y] = depth_[x] + 1;
          ball->vertices.push_back(y);
        }
      }
    }
    ball->table.resize(ball->vertices.size() * d);
    for (std::size_t v = 0; v < ball->vertices.size(); ++v) {
      const Vertex x = static_cast<Vertex>(ball->vertices[v]);
      for (int s = 0; s < d; ++s) {
        ball->table[v * d + s] = local_[g_.Apply(s, x)];
      }
    }
    for (std::int64_t x : ball->vertices) local_[x] = -1;
  }

 private:
  const LabeledGraph& g_;
  std::vector<std::int32_t> local_;
  std::vector<int> depth_;
};

}  // namespace

RootedBall MakeRootedBall(const LabeledGraph& g, Vertex root, int radius) {
  if (radius < 0) throw Error(ErrorCode::kInvalidArgument, "negative radius");
  if (root < 0 || root >= g.num_vertices()) {
    throw Error(ErrorCode::kInvalidArgument, "root is not a vertex");
  }
  RootedBall ball;
  ball.generators = g.generators();
  BallBuilder(g).Build(root, radius, &ball);
  return ball;
}

bool RootedBallsIsomorphic(const RootedBall& a, const RootedBall& b) {
  return a.radius == b.radius && a.generators == b.generators &&
         a.table == b.table;
}

VertexSet GoodVertices(const LabeledGraph& g, const RootedBall& reference) {
  if (!(g.generators() == reference.generators)) {
    throw Error(ErrorCode::kGeneratorSetMismatch,
                "reference ball uses a different generator set");
  }
  VertexSet good(g.num_vertices());
  BallBuilder builder(g);
  RootedBall ball;
  for (Vertex x = 0; x < g.num_vertices(); ++x) {
    builder.Build(x, reference.radius, &ball);
    if (ball.table == reference.table) good.Insert(x);
  }
  return good;
}

}  // namespace sofic
