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

#ifndef SOFIC_CORE_GRAPH_H_
#define SOFIC_CORE_GRAPH_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sofic {

using Vertex = std::int32_t;
using Permutation = std::vector<Vertex>;

// An ordered list of generator symbols together with the involution s <-> s^-1.
// A symbol may be its own inverse.
class GeneratorSet {
 public:
  GeneratorSet() = default;

  // Throws kInvalidArgument when names repeat or `inverse` is not an
  // involution on 0..names.size()-1.
  static GeneratorSet Create(std::vector<std::string> names,
                             std::vector<int> inverse);

  // Builds the set from (name, inverse name) entries; each pair may be listed
  // from either side or both.
  static GeneratorSet FromInverseNames(
      const std::vector<std::pair<std::string, std::string>>& entries);

  int size() const { return static_cast<int>(names_.size()); }
  bool empty() const { return names_.empty(); }
  const std::string& name(int s) const { return names_[s]; }
  const std::vector<std::string>& names() const { return names_; }
  int inverse(int s) const { return inverse_[s]; }
  bool IsSelfInverse(int s) const { return inverse_[s] == s; }
  // For each undirected edge class we count once: the pair representative is
  // the smaller index of {s, s^-1}.
  bool IsCanonical(int s) const { return s <= inverse_[s]; }

  std::optional<int> Find(std::string_view name) const;
  // Like Find, but throws kUnknownSymbol.
  int IndexOf(std::string_view name) const;

  bool operator==(const GeneratorSet& other) const = default;

 private:
  std::vector<std::string> names_;
  std::vector<int> inverse_;
};

// A labeled undirected edge {from, to} carrying `label` in the from -> to
// direction (and label^-1 backwards).
struct Edge {
  Vertex from;
  Vertex to;
  int label;
  bool operator==(const Edge&) const = default;
};

// Subset of 0..universe-1 stored as a bit set with a cached cardinality.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::int64_t universe);
  static VertexSet FromElements(std::int64_t universe,
                                std::span<const std::int64_t> elements);
  static VertexSet Full(std::int64_t universe);

  std::int64_t universe() const { return universe_; }
  std::int64_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  bool Contains(std::int64_t v) const {
    return (bits_[v >> 6] >> (v & 63)) & 1u;
  }
  void Insert(std::int64_t v);
  void Erase(std::int64_t v);

  VertexSet Complement() const;
  VertexSet Intersect(const VertexSet& other) const;
  std::int64_t SymmetricDifferenceSize(const VertexSet& other) const;
  std::vector<std::int64_t> Elements() const;

  bool operator==(const VertexSet& other) const {
    return universe_ == other.universe_ && bits_ == other.bits_;
  }

 private:
  std::int64_t universe_ = 0;
  std::int64_t size_ = 0;
  std::vector<std::uint64_t> bits_;
};

// A finite, regularly S-labeled graph: one permutation of the vertex set per
// generator symbol, with action(s^-1) = action(s)^-1. Immutable once built.
class LabeledGraph {
 public:
  LabeledGraph() = default;

  // Validates every action (kNotAPermutation, kLengthMismatch) and the
  // inverse pairing (kInversePairMismatch).
  static LabeledGraph Create(int n, GeneratorSet generators,
                             std::vector<Permutation> actions);

  int num_vertices() const { return n_; }
  // d = |S|.
  int degree() const { return generators_.size(); }
  const GeneratorSet& generators() const { return generators_; }
  const Permutation& action(int s) const { return actions_[s]; }
  const std::vector<Permutation>& actions() const { return actions_; }
  Vertex Apply(int s, Vertex x) const { return actions_[s][x]; }

  // No loops and no two labels joining the same pair of vertices.
  bool IsSimple() const;
  bool HasLoops() const;
  // Component index per vertex, numbered in order of smallest vertex.
  std::vector<int> ComponentLabels() const;
  int NumComponents() const;

  // Every undirected labeled edge exactly once, loops included. Pair symbols
  // contribute n edges (x, s.x) for the canonical member s; a self-inverse
  // symbol contributes one edge per orbit of size 2 and one loop per fixed
  // point.
  std::vector<Edge> Edges() const;
  std::int64_t NumEdges() const;

 private:
  int n_ = 0;
  GeneratorSet generators_;
  std::vector<Permutation> actions_;
};

// Number of non-loop edges with exactly one endpoint in `s`.
std::int64_t BoundaryCount(const LabeledGraph& g, const VertexSet& s);

struct BoundaryResult {
  std::int64_t count = 0;
  std::vector<Edge> edges;
};
BoundaryResult Boundary(const LabeledGraph& g, const VertexSet& s);

// Group multiplication table over elements 0..order-1, row a column b holding
// a*b.
class MultiplicationTable {
 public:
  MultiplicationTable() = default;

  // Throws kInvalidTable unless the table is a Latin square with a two-sided
  // identity; associativity is checked when `check_associativity` is set.
  static MultiplicationTable Create(std::vector<std::vector<int>> rows,
                                    bool check_associativity);

  int order() const { return order_; }
  int Multiply(int a, int b) const { return table_[a * order_ + b]; }
  int identity() const { return identity_; }
  int Inverse(int a) const { return inverse_[a]; }
  bool IsAssociative() const;
  bool IsAbelian() const;
  std::vector<std::vector<int>> Rows() const;

 private:
  int order_ = 0;
  int identity_ = 0;
  std::vector<int> table_;
  std::vector<int> inverse_;
};

// Tables up to this order get an associativity check by default.
inline constexpr int kAssociativityCheckLimit = 128;

// Left Cayley graph: vertices are group elements, symbol s acts by x -> s*x.
// `names` defaults to "g<index>". Throws kNotInverseClosed.
LabeledGraph CayleyGraph(const MultiplicationTable& table,
                         std::span<const int> gen_indices,
                         std::vector<std::string> names = {});

// Diagonal product: (x, y) has index x * |V(h)| + y and s.(x, y) = (s.x, s.y).
LabeledGraph ProductGraph(const LabeledGraph& g, const LabeledGraph& h);

inline std::int64_t ProductIndex(std::int64_t x, std::int64_t y, int h_size) {
  return x * h_size + y;
}

// Keeps only the listed symbols, in the order given. Throws kUnknownSymbol or
// kNotInverseClosed.
LabeledGraph RestrictLabels(const LabeledGraph& g,
                            std::span<const std::string> symbols);

// The rooted r-ball in canonical form: local vertices are numbered in BFS
// discovery order from the root (local 0), scanning generators in index order.
// `table[v * d + s]` is the local index of s.v, or -1 when s.v lies outside
// the ball. Two balls are label- and root-preserving isomorphic iff their
// canonical forms are equal.
struct RootedBall {
  int radius = 0;
  GeneratorSet generators;
  std::vector<std::int64_t> vertices;  // original vertex ids, BFS order
  std::vector<std::int32_t> table;

  int size() const { return static_cast<int>(vertices.size()); }
};

RootedBall MakeRootedBall(const LabeledGraph& g, Vertex root, int radius);
bool RootedBallsIsomorphic(const RootedBall& a, const RootedBall& b);

// Vertices whose r-ball (r = reference.radius) is isomorphic to `reference`.
VertexSet GoodVertices(const LabeledGraph& g, const RootedBall& reference);

}  // namespace sofic

#endif  // SOFIC_CORE_GRAPH_H_
