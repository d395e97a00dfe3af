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

#ifndef SOFIC_RANDOM_H_
#define SOFIC_RANDOM_H_

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace sofic {

// Seeded stream whose outputs are fixed by the standard (mt19937_64) and by
// the draws below, unlike the library distributions, so runs reproduce
// byte-for-byte across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t Next() { return engine_(); }

  // Uniform on [0, bound), rejection sampling. bound > 0.
  std::uint64_t Below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  // Uniform on [-1, 1).
  double Symmetric() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-52 - 1.0;
  }

  // Fisher-Yates.
  std::vector<std::int32_t> Permutation(int n) {
    std::vector<std::int32_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    for (int i = n - 1; i > 0; --i) {
      std::swap(p[i], p[Below(static_cast<std::uint64_t>(i) + 1)]);
    }
    return p;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace sofic

#endif  // SOFIC_RANDOM_H_
