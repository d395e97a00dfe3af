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

#include "sofic/sofic_report.h"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "sofic/error.h"
#include "sofic/random.h"

namespace sofic {

namespace {

std::vector<int> LetterIndices(const GeneratorSet& gens, const Word& w) {
  std::vector<int> idx;
  idx.reserve(w.letters.size());
  for (const std::string& letter : w.letters) idx.push_back(gens.IndexOf(letter));
  return idx;
}

std::string PairName(int i, bool inverse) {
  if (i < 26) {
    return std::string(1, static_cast<char>((inverse ? 'A' : 'a') + i));
  }
  return (inverse ? "X" : "x") + std::to_string(i);
}

}  // namespace

Permutation WordAction(const LabeledGraph& g, const Word& w) {
  const std::vector<int> idx = LetterIndices(g.generators(), w);
  Permutation p(g.num_vertices());
  std::iota(p.begin(), p.end(), 0);
  for (auto it = idx.rbegin(); it != idx.rend(); ++it) {
    const Permutation& s = g.action(*it);
    for (Vertex& y : p) y = s[y];
  }
  return p;
}

std::int64_t DefectCount(const LabeledGraph& g, const Word& w) {
  const Permutation p = WordAction(g, w);
  std::int64_t fixed = 0;
  for (Vertex x = 0; x < g.num_vertices(); ++x) fixed += p[x] == x;
  return w.expects_identity ? g.num_vertices() - fixed : fixed;
}

double Defect(const LabeledGraph& g, const Word& w) {
  if (g.num_vertices() == 0) return 0.0;
  return static_cast<double>(DefectCount(g, w)) / g.num_vertices();
}

SoficReport MakeSoficReport(const LabeledGraph& g, std::span<const Word> words) {
  if (words.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "sofic report needs words");
  }
  SoficReport report;
  report.n = g.num_vertices();
  for (const Word& w : words) {
    WordDefect wd;
    wd.word = w;
    wd.violations = DefectCount(g, w);
    wd.defect = report.n == 0 ? 0.0
                              : static_cast<double>(wd.violations) / report.n;
    report.max_defect = std::max(report.max_defect, wd.defect);
    report.words.push_back(std::move(wd));
  }
  return report;
}

LabeledGraph RandomPermutationModel(int n, int pairs, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "need n >= 1");
  if (pairs < 0) throw Error(ErrorCode::kInvalidArgument, "need pairs >= 0");
  Rng rng(seed);
  std::vector<std::string> names;
  std::vector<int> inverse;
  std::vector<Permutation> actions;
  for (int i = 0; i < pairs; ++i) {
    Permutation p = rng.Permutation(n);
    Permutation q(n);
    for (Vertex x = 0; x < n; ++x) q[p[x]] = x;
    names.push_back(PairName(i, false));
    names.push_back(PairName(i, true));
    inverse.push_back(2 * i + 1);
    inverse.push_back(2 * i);
    actions.push_back(std::move(p));
    actions.push_back(std::move(q));
  }
  return LabeledGraph::Create(
      n, GeneratorSet::Create(std::move(names), std::move(inverse)),
      std::move(actions));
}

Word InverseWord(const GeneratorSet& gens, const Word& w) {
  Word inv;
  inv.expects_identity = w.expects_identity;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    inv.letters.push_back(gens.name(gens.inverse(gens.IndexOf(*it))));
  }
  return inv;
}

Word FreelyReduce(const GeneratorSet& gens, const Word& w) {
  std::vector<int> stack;
  for (int s : LetterIndices(gens, w)) {
    if (!stack.empty() && gens.inverse(stack.back()) == s) {
      stack.pop_back();
    } else {
      stack.push_back(s);
    }
  }
  Word out;
  out.expects_identity = w.expects_identity;
  for (int s : stack) out.letters.push_back(gens.name(s));
  return out;
}

std::vector<Word> ReducedWords(const GeneratorSet& gens, int max_len,
                               bool expects_identity) {
  std::vector<Word> out;
  std::vector<std::vector<int>> layer = {{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::vector<int>> next;
    for (const std::vector<int>& prefix : layer) {
      for (int s = 0; s < gens.size(); ++s) {
        if (!prefix.empty() && gens.inverse(prefix.back()) == s) continue;
        std::vector<int> word = prefix;
        word.push_back(s);
        Word w;
        w.expects_identity = expects_identity;
        for (int t : word) w.letters.push_back(gens.name(t));
        out.push_back(std::move(w));
        next.push_back(std::move(word));
      }
    }
    layer = std::move(next);
  }
  return out;
}

Word ParseWord(std::string_view line) {
  Word w;
  std::istringstream in{std::string(line)};
  std::string token;
  bool first = true;
  while (in >> token) {
    if (first && token[0] == '!') {
      w.expects_identity = false;
      token.erase(0, 1);
    }
    first = false;
    if (!token.empty() && token != "()") w.letters.push_back(token);
  }
  return w;
}

std::string FormatWord(const Word& w) {
  std::string out = w.expects_identity ? "" : "!";
  if (w.letters.empty()) return out + "()";
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i > 0) out += ' ';
    out += w.letters[i];
  }
  return out;
}

}  // namespace sofic
