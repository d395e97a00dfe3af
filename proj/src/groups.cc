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

#include "sofic/groups.h"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>

#include "sofic/error.h"

namespace sofic {

namespace {

int Factorial(int n) {
  int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

int PermutationRank(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  int rank = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j) smaller += perm[j] < perm[i];
    rank = rank * (n - i) + smaller;
  }
  return rank;
}

std::vector<int> PermutationUnrank(int n, int rank) {
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<int> perm;
  for (int i = 0; i < n; ++i) {
    const int f = Factorial(n - 1 - i);
    const int k = rank / f;
    rank %= f;
    perm.push_back(pool[k]);
    pool.erase(pool.begin() + k);
  }
  return perm;
}

GroupPreset CyclicGroup(int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "cyclic order must be >= 1");
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) rows[a][b] = (a + b) % n;
  }
  GroupPreset g;
  g.name = "z" + std::to_string(n);
  g.table = MultiplicationTable::Create(std::move(rows), false);
  if (n == 2) {
    g.generators = {1};
    g.generator_names = {"a"};
  } else if (n > 2) {
    g.generators = {1, n - 1};
    g.generator_names = {"a", "A"};
  }
  return g;
}

GroupPreset SymmetricGroup(int n) {
  if (n < 1 || n > 7) {
    throw Error(ErrorCode::kInvalidArgument,
                "symmetric group degree must be in 1..7");
  }
  const int order = Factorial(n);
  std::vector<std::vector<int>> perms(order);
  for (int r = 0; r < order; ++r) perms[r] = PermutationUnrank(n, r);
  std::vector<std::vector<int>> rows(order, std::vector<int>(order));
  std::vector<int> composed(n);
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      for (int i = 0; i < n; ++i) composed[i] = perms[a][perms[b][i]];
      rows[a][b] = PermutationRank(composed);
    }
  }
  GroupPreset g;
  g.name = "s" + std::to_string(n);
  g.table = MultiplicationTable::Create(std::move(rows), false);
  if (n == 2) {
    g.generators = {1};
    g.generator_names = {"t"};
  } else if (n > 2) {
    std::vector<int> t(n), c(n), cinv(n);
    std::iota(t.begin(), t.end(), 0);
    std::swap(t[0], t[1]);
    for (int i = 0; i < n; ++i) {
      c[i] = (i + 1) % n;
      cinv[i] = (i + n - 1) % n;
    }
    g.generators = {PermutationRank(t), PermutationRank(c),
                    PermutationRank(cinv)};
    g.generator_names = {"t", "c", "C"};
  }
  return g;
}

GroupPreset DihedralGroup(int n) {
  if (n < 2) throw Error(ErrorCode::kInvalidArgument, "dihedral n must be >= 2");
  const int order = 2 * n;
  std::vector<std::vector<int>> rows(order, std::vector<int>(order));
  for (int x = 0; x < order; ++x) {
    const int a = x % n, i = x / n;
    for (int y = 0; y < order; ++y) {
      const int b = y % n, j = y / n;
      // (r^a f^i)(r^b f^j) = r^(a + (-1)^i b) f^(i + j)
      const int k = ((i == 0 ? a + b : a - b) % n + n) % n;
      rows[x][y] = k + n * ((i + j) % 2);
    }
  }
  GroupPreset g;
  g.name = "d" + std::to_string(n);
  g.table = MultiplicationTable::Create(std::move(rows), false);
  if (n == 2) {
    g.generators = {1, n};
    g.generator_names = {"r", "f"};
  } else {
    g.generators = {1, n - 1, n};
    g.generator_names = {"r", "R", "f"};
  }
  return g;
}

GroupPreset DirectProduct(const GroupPreset& left, const GroupPreset& right) {
  const int m = right.table.order();
  const int order = left.table.order() * m;
  std::vector<std::vector<int>> rows(order, std::vector<int>(order));
  for (int x = 0; x < order; ++x) {
    for (int y = 0; y < order; ++y) {
      rows[x][y] = left.table.Multiply(x / m, y / m) * m +
                   right.table.Multiply(x % m, y % m);
    }
  }
  GroupPreset g;
  g.name = left.name + "*" + right.name;
  g.table = MultiplicationTable::Create(std::move(rows), false);
  std::set<std::string> used(left.generator_names.begin(),
                             left.generator_names.end());
  for (std::size_t i = 0; i < left.generators.size(); ++i) {
    g.generators.push_back(left.generators[i] * m + right.table.identity());
    g.generator_names.push_back(left.generator_names[i]);
  }
  // One suffix for the whole right factor so inverse pairs stay recognizable.
  std::string suffix;
  auto clashes = [&](const std::string& sfx) {
    return std::any_of(right.generator_names.begin(),
                       right.generator_names.end(),
                       [&](const std::string& s) { return used.contains(s + sfx); });
  };
  for (int k = 2; clashes(suffix); ++k) suffix = std::to_string(k);
  for (std::size_t i = 0; i < right.generators.size(); ++i) {
    g.generators.push_back(left.table.identity() * m + right.generators[i]);
    g.generator_names.push_back(right.generator_names[i] + suffix);
  }
  return g;
}

GroupPreset ParseGroupPreset(std::string_view text) {
  const auto star = text.find('*');
  if (star != std::string_view::npos) {
    return DirectProduct(ParseGroupPreset(text.substr(0, star)),
                         ParseGroupPreset(text.substr(star + 1)));
  }
  if (text.size() < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "unknown group preset '" + std::string(text) + "'");
  }
  int n = 0;
  const char* first = text.data() + 1;
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, n);
  if (ec != std::errc() || ptr != last) {
    throw Error(ErrorCode::kInvalidArgument,
                "unknown group preset '" + std::string(text) + "'");
  }
  switch (text[0]) {
    case 'z': return CyclicGroup(n);
    case 's': return SymmetricGroup(n);
    case 'd': return DihedralGroup(n);
    default:
      throw Error(ErrorCode::kInvalidArgument,
                  "unknown group preset '" + std::string(text) + "'");
  }
}

}  // namespace sofic
