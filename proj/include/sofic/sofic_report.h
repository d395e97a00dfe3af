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

#ifndef SOFIC_SOFIC_REPORT_H_
#define SOFIC_SOFIC_REPORT_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sofic/core_graph.h"

namespace sofic {

// A word s_1 ... s_k over the generator symbols, together with whether it is
// the identity in the group being approximated.
struct Word {
  std::vector<std::string> letters;
  bool expects_identity = true;

  bool operator==(const Word&) const = default;
};

// x -> s_1 ... s_k . x; the rightmost letter acts first.
Permutation WordAction(const LabeledGraph& g, const Word& w);

// Number of vertices where the word misbehaves: moved vertices if it should be
// the identity, fixed vertices otherwise.
std::int64_t DefectCount(const LabeledGraph& g, const Word& w);
double Defect(const LabeledGraph& g, const Word& w);

struct WordDefect {
  Word word;
  std::int64_t violations = 0;
  double defect = 0.0;
};

struct SoficReport {
  int n = 0;
  std::vector<WordDefect> words;
  double max_defect = 0.0;
};

// Throws kInvalidArgument for an empty word list, kUnknownSymbol for bad
// letters.
SoficReport MakeSoficReport(const LabeledGraph& g, std::span<const Word> words);

// `pairs` independent uniform permutations (Fisher-Yates from a seeded
// mt19937_64), each paired with its inverse. Pair i is named by the i-th
// lowercase letter with the uppercase letter as inverse ("x<i>"/"X<i>" past
// 26 pairs).
LabeledGraph RandomPermutationModel(int n, int pairs, std::uint64_t seed);

// Inverse word: letters reversed and inverted.
Word InverseWord(const GeneratorSet& gens, const Word& w);
// Cancels adjacent s s^-1 pairs until none remain.
Word FreelyReduce(const GeneratorSet& gens, const Word& w);

// All nonempty freely reduced words of length <= max_len, shortlex order by
// generator index.
std::vector<Word> ReducedWords(const GeneratorSet& gens, int max_len,
                               bool expects_identity);

// "a b A" is a word expected to be the identity; a leading "!" marks one that
// is expected not to be. "()" stands for the empty word and is written by
// FormatWord; an empty line or a lone "!" parses to it as well.
Word ParseWord(std::string_view line);
std::string FormatWord(const Word& w);

}  // namespace sofic

#endif  // SOFIC_SOFIC_REPORT_H_
