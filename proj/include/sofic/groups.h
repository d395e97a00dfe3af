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

#ifndef SOFIC_GROUPS_H_
#define SOFIC_GROUPS_H_

#include <string>
#include <string_view>
#include <vector>

#include "sofic/core_graph.h"

namespace sofic {

// A finite group with a distinguished inverse-closed generating list, ready to
// be turned into a Cayley graph.
struct GroupPreset {
  std::string name;
  MultiplicationTable table;
  std::vector<int> generators;
  std::vector<std::string> generator_names;

  LabeledGraph Cayley() const {
    return CayleyGraph(table, generators, generator_names);
  }
};

// Z_n with generators a = 1 and A = -1 (a alone when n = 2).
GroupPreset CyclicGroup(int n);

// Sym(n) acting on {0..n-1}; elements are permutations in lexicographic order
// and a*b = a o b. Generators: t = (0 1), c = (0 1 ... n-1), C = c^-1.
GroupPreset SymmetricGroup(int n);

// Dihedral group of order 2n; element r^k f^j has index k + n*j.
// Generators: r, R = r^-1, f.
GroupPreset DihedralGroup(int n);

// (a, b) has index a * |B| + b. When any generator name of the right factor
// clashes with the left factor's, all right names get the first numeric suffix
// (2, 3, ...) that avoids every clash.
GroupPreset DirectProduct(const GroupPreset& left, const GroupPreset& right);

// Parses "z6", "s4", "d5" and '*'-separated direct products such as "s4*z5".
// Throws kInvalidArgument.
GroupPreset ParseGroupPreset(std::string_view text);

// Index of a permutation of {0..n-1} among all n! in lexicographic order.
int PermutationRank(const std::vector<int>& perm);
std::vector<int> PermutationUnrank(int n, int rank);

}  // namespace sofic

#endif  // SOFIC_GROUPS_H_
