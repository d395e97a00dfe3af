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

// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails. Each criterion carries its own wall-clock budget.
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "sofic/almost_auto.h"
#include "sofic/cli.h"
#include "sofic/clusters.h"
#include "sofic/expansion.h"
#include "sofic/groups.h"
#include "sofic/io.h"
#include "sofic/sofic_report.h"
#include "test_util.h"

namespace sofic {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string Fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof(buf), format, args...);
  return buf;
}

VertexMap RightTranslation(const GroupPreset& g, int h) {
  std::vector<Vertex> img(g.table.order());
  for (int x = 0; x < g.table.order(); ++x) img[x] = g.table.Multiply(x, h);
  return VertexMap(img);
}

// Bad edges straight from the definition, used as an automorphism oracle.
std::int64_t OracleBadEdges(const LabeledGraph& g, const std::vector<Vertex>& c) {
  std::int64_t bad = 0;
  for (int s = 0; s < g.degree(); ++s) {
    for (Vertex x = 0; x < g.num_vertices(); ++x) {
      bad += c[g.action(s)[x]] != g.action(s)[c[x]];
    }
  }
  return bad;
}

// 1. |dB| = 2 bad_edges on simple graphs.
Outcome BoundaryCorrespondence() {
  std::mt19937 rng(20260101);
  int trials = 0, agree = 0;
  for (; trials < 1000; ++trials) {
    const int pairs = 1 + trials % 2;
    const int involutions = trials % 3 == 0 ? 1 : 0;
    int n = 5 + static_cast<int>(rng() % 196);
    if (involutions > 0 && n % 2 == 1) ++n;
    n = std::min(n, 200);
    const LabeledGraph g =
        testing::RandomSimpleGraph(n, pairs, involutions, rng);
    const VertexMap c(testing::RandomPerm(n, rng));
    const LabeledGraph prod = ProductGraph(g, g);
    const std::int64_t boundary = BoundaryCount(prod, GraphOfMap(g, c));
    const DefectReport r = DefectOfMap(g, c);
    agree += boundary == 2 * r.bad_edges && r.boundary_of_graph == boundary;
  }
  return {agree == trials, Fmt("%d/%d random simple graphs, n <= 200", agree,
                               trials)};
}

// 2. lower <= exact <= upper, plus exhaustive anchors.
Outcome CheegerSandwich() {
  std::mt19937 rng(20260102);
  int checked = 0, inside = 0;
  while (checked < 100) {
    int n = 4 + static_cast<int>(rng() % 17);
    const int involutions = checked % 4 == 0 ? 1 : 0;
    if (involutions > 0 && n % 2 == 1) --n;
    const LabeledGraph g =
        testing::RandomLabeledGraph(n, 1 + checked % 2, involutions, rng);
    if (!testing::OracleConnected(g)) continue;
    ++checked;
    const double h = CheegerExact(g).value();
    const CheegerEstimate b = CheegerBounds(g, Lambda2(g));
    inside += b.lower <= h + 1e-12 && h <= b.upper + 1e-12;
  }
  const LabeledGraph c6 = testing::Cycle(6);
  const LabeledGraph k4 = CayleyGraph(CyclicGroup(4).table,
                                      std::vector<int>{1, 2, 3});
  const double h_c6 = CheegerExact(c6).value();
  const double h_k4 = CheegerExact(k4).value();
  const bool anchors = h_c6 == 2.0 / 3.0 && h_k4 == 2.0 &&
                       testing::BruteForceCheeger(c6).value == h_c6 &&
                       testing::BruteForceCheeger(k4).value == h_k4;
  return {inside == checked && anchors,
          Fmt("%d/%d sandwiched; h(C6)=%.12g h(K4)=%.12g", inside, checked,
              h_c6, h_k4)};
}

// 3. lambda2 against circulant spectra.
Outcome SpectralAnchors() {
  const double c6 = Lambda2(testing::Cycle(6)).lambda2;
  const double k4 = Lambda2(CayleyGraph(CyclicGroup(4).table,
                                        std::vector<int>{1, 2, 3}))
                        .lambda2;
  const double c6_ref = testing::CirculantSpectrum(6, {1, 5})[1];
  const double k4_ref = testing::CirculantSpectrum(4, {1, 2, 3})[1];
  const bool pass = std::abs(c6 - 0.5) <= 1e-8 &&
                    std::abs(k4 + 1.0 / 3.0) <= 1e-8 &&
                    std::abs(c6_ref - 0.5) <= 1e-12 &&
                    std::abs(k4_ref + 1.0 / 3.0) <= 1e-12;
  return {pass, Fmt("lambda2(C6)=%.12f lambda2(K4)=%.12f (tol 1e-8)", c6, k4)};
}

// 4. Automorphism groups recovered as cluster groups at delta = 0.
Outcome AutomorphismRecovery() {
  const LabeledGraph s3 = SymmetricGroup(3).Cayley();
  std::vector<VertexMap> brute;
  std::vector<Vertex> p = {0, 1, 2, 3, 4, 5};
  do {
    if (OracleBadEdges(s3, p) == 0) brute.emplace_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const bool enum_ok = ExactAutomorphisms(s3) == brute;
  const GroupInvariants s3_inv =
      ComputeGroupInvariants(BuildClusterGroup(s3, 0.0, brute, {}));

  const GroupPreset z5 = CyclicGroup(5);
  const LabeledGraph c5 = z5.Cayley();
  std::set<std::vector<Vertex>> found;
  for (int h = 0; h < 5; ++h) found.insert(RightTranslation(z5, h).images());
  std::mt19937 rng(20260104);
  bool search_ok = true;
  for (int i = 0; i < 5000; ++i) {
    const std::vector<Vertex> q = testing::RandomPerm(5, rng);
    if (OracleBadEdges(c5, q) == 0) search_ok &= found.contains(q);
  }
  std::vector<VertexMap> z5_maps;
  for (const auto& img : found) z5_maps.emplace_back(img);
  const GroupInvariants z5_inv =
      ComputeGroupInvariants(BuildClusterGroup(c5, 0.0, z5_maps, {}));

  const bool pass =
      enum_ok && brute.size() == 6 && s3_inv.order == 6 && !s3_inv.abelian &&
      s3_inv.element_orders == std::vector<int>{1, 2, 2, 2, 3, 3} &&
      search_ok && z5_inv.order == 5 && z5_inv.abelian &&
      z5_inv.element_orders == std::vector<int>{1, 5, 5, 5, 5};
  return {pass, Fmt("S3: order %d, %s; Z5: order %d, %s", s3_inv.order,
                    s3_inv.abelian ? "abelian" : "nonabelian", z5_inv.order,
                    z5_inv.abelian ? "abelian" : "nonabelian")};
}

struct RecoveryData {
  double h0 = 0.0;
  double delta = 0.0;
  std::vector<VertexMap> recovered;
};

RecoveryData& Recovery() {
  static RecoveryData data;
  return data;
}

// 5. Corrupted right translations of S_5 are pulled back into their cluster.
Outcome ImprovementRecovery() {
  const GroupPreset s5 = SymmetricGroup(5);
  const LabeledGraph g = s5.Cayley();
  const int n = g.num_vertices();
  RecoveryData& data = Recovery();
  data.h0 = CheegerBounds(g, Lambda2(g)).lower;
  if (!(data.h0 > 0.0)) return {false, "spectral Cheeger bound is not positive"};
  ImprovementConfig cfg;
  cfg.target_delta = 1.0 / n;
  cfg.alpha = data.h0 / 4.0;
  std::mt19937 rng(20260105);
  int same_cluster = 0, never_worse = 0, exact = 0;
  double worst_eps = 0.0;
  for (int h = 0; h < n; ++h) {
    const VertexMap truth = RightTranslation(s5, h);
    std::vector<Vertex> img = truth.images();
    const Vertex a = static_cast<Vertex>(rng() % n);
    Vertex b = static_cast<Vertex>(rng() % (n - 1));
    if (b >= a) ++b;
    std::swap(img[a], img[b]);
    const VertexMap corrupted(img);
    const ImprovementResult r = Improve(g, corrupted, cfg);
    same_cluster += WithinFifth(Hamming(r.map, truth), n);
    never_worse += BadEdgeCount(g, r.map) <= BadEdgeCount(g, corrupted);
    exact += r.map == truth;
    worst_eps = std::max(worst_eps, r.trace.final.epsilon);
    data.recovered.push_back(r.map);
  }
  data.delta = worst_eps;
  const bool pass = same_cluster * 100 >= 95 * n && never_worse == n;
  return {pass, Fmt("h0=%.4f; same cluster %d/%d (need >= 95%%), exact %d, "
                    "never worse %d/%d",
                    data.h0, same_cluster, n, exact, never_worse, n)};
}

// 6. Pairwise distances of the recovered maps avoid the forbidden band.
Outcome Dichotomy() {
  const RecoveryData& data = Recovery();
  if (data.recovered.empty() || !(data.h0 > 0.0)) {
    return {false, "criterion 5 produced no maps"};
  }
  const LabeledGraph g = SymmetricGroup(5).Cayley();
  const DichotomyReport r = DichotomyCheck(g, data.delta, data.recovered, data.h0);
  return {r.violations.empty() && r.over_defect.empty(),
          Fmt("%lld pairs, delta=%.5f, bound 2*delta*n/h0=%.3f, %zu violations",
              static_cast<long long>(r.pairs_checked), data.delta, r.bound,
              r.violations.size())};
}

// 7. F = {0, 1, 2} of Z_5 embeds into the cluster group of the S_4 part.
Outcome LefCertificateCheck() {
  const LabeledGraph g = ParseGroupPreset("s4*z5").Cayley();
  const std::vector<std::string> gamma = {"t", "c", "C"};
  const std::vector<Word> f = {ParseWord("()"), ParseWord("a"),
                               ParseWord("a a")};
  const LefCertificate cert = CheckLef(g, gamma, f, 0.0, {});
  const std::set<int> distinct(cert.f_clusters.begin(), cert.f_clusters.end());
  const auto& orders = cert.invariants.element_orders;
  const bool has_five = std::find(orders.begin(), orders.end(), 5) != orders.end();
  const bool pass = cert.certified && distinct.size() == 3 && has_five;
  return {pass, Fmt("%s; %zu distinct clusters; image group order %d",
                    cert.certified ? "certified" : "not certified",
                    distinct.size(), cert.invariants.order)};
}

// Word value in a preset's group, evaluated on the multiplication table.
int Evaluate(const GroupPreset& g, const Word& w) {
  int value = g.table.identity();
  for (const std::string& letter : w.letters) {
    const auto it = std::find(g.generator_names.begin(),
                              g.generator_names.end(), letter);
    value = g.table.Multiply(value, g.generators[it - g.generator_names.begin()]);
  }
  return value;
}

// 8. Zero defect on finite groups' own relations; frozen random-model value.
Outcome SoficDefects() {
  int presets = 0, clean = 0;
  for (const char* preset : {"z2", "z5", "z8", "s2", "s3", "s4", "s5", "d2", "d3",
                           "d6", "s3*z5", "z2*z3*z4"}) {
    const GroupPreset g = ParseGroupPreset(preset);
    const LabeledGraph cay = g.Cayley();
    std::vector<Word> words;
    for (Word w : ReducedWords(cay.generators(), 4, true)) {
      w.expects_identity = Evaluate(g, w) == g.table.identity();
      words.push_back(std::move(w));
    }
    // Each generator's order gives a relation s^k.
    for (std::size_t s = 0; s < g.generators.size(); ++s) {
      Word power;
      int x = g.generators[s];
      power.letters.push_back(g.generator_names[s]);
      while (x != g.table.identity()) {
        x = g.table.Multiply(g.generators[s], x);
        power.letters.push_back(g.generator_names[s]);
      }
      words.push_back(power);
    }
    ++presets;
    clean += MakeSoficReport(cay, words).max_defect == 0.0;
  }
  const LabeledGraph model = RandomPermutationModel(10000, 2, 1);
  const SoficReport report =
      MakeSoficReport(model, ReducedWords(model.generators(), 4, false));
  const bool pass =
      clean == presets && report.max_defect <= 0.01 && report.max_defect == 4e-4;
  return {pass, Fmt("%d/%d presets with zero defect; random model n=10^4 "
                    "max_defect=%.6f (frozen 0.0004, limit 0.01)",
                    clean, presets, report.max_defect)};
}

// 9. Every subcommand replays from its manifest to identical bytes.
Outcome Determinism() {
  const fs::path saved = fs::current_path();
  const fs::path dir = fs::temp_directory_path() / "sofic_acceptance_replay";
  fs::remove_all(dir);
  fs::create_directories(dir);
  fs::current_path(dir);
  auto run = [](std::vector<std::string> args) {
    std::ostringstream out, err;
    return RunCli(args, out, err);
  };
  std::string map;
  for (int x = 0; x < 24; ++x) map += std::to_string(x == 2 ? 9 : x == 9 ? 2 : x) + "\n";
  WriteTextFile("m.txt", map);
  WriteTextFile("f.txt", "()\na\na a\n");
  const std::vector<std::vector<std::string>> commands = {
      {"gen", "cayley", "--group", "s4", "-o", "s4.json"},
      {"gen", "cayley", "--group", "s3*z5", "-o", "p.json"},
      {"--seed", "7", "gen", "random", "--n", "2000", "--pairs", "2", "-o",
       "r.json"},
      {"gen", "restrict", "p.json", "--labels", "t,c,C", "-o", "q.json"},
      {"cheeger", "s4.json", "-o", "cheeger.json"},
      {"--seed", "3", "cheeger", "r.json", "-o", "cheeger_r.json"},
      {"sofic", "r.json", "--max-len", "3", "-o", "sofic.json"},
      {"improve", "s4.json", "--map", "m.txt", "-o", "improved.txt"},
      {"cluster-group", "s4.json", "--automorphisms", "-o", "cg.json"},
      {"lef-check", "p.json", "--gamma", "t,c,C", "--words", "f.txt", "-o",
       "lef.json"},
      {"report", "r.json", "-o", "report.json"},
  };
  int replayed = 0, identical = 0, files = 0;
  std::string first_failure;
  for (const auto& cmd : commands) {
    const std::string output = cmd.back();
    if (run(cmd) != 0) {
      if (first_failure.empty()) first_failure = cmd[0] + " failed";
      continue;
    }
    const Json manifest =
        Json::parse(ReadTextFile(output + ".manifest.json"));
    std::vector<std::pair<std::string, std::string>> before;
    for (const Json& o : manifest["outputs"]) {
      const std::string path = o.get<std::string>();
      before.emplace_back(path, ReadTextFile(path));
    }
    // Replay rewrites the manifest; keep a copy to replay from.
    fs::copy_file(output + ".manifest.json", output + ".saved",
                  fs::copy_options::overwrite_existing);
    for (const auto& [path, bytes] : before) fs::remove(path);
    if (run({"replay", output + ".saved"}) != 0) {
      if (first_failure.empty()) first_failure = "replay of " + output;
      continue;
    }
    ++replayed;
    bool same = true;
    for (const auto& [path, bytes] : before) {
      ++files;
      same &= fs::exists(path) && ReadTextFile(path) == bytes;
    }
    identical += same;
    if (!same && first_failure.empty()) first_failure = output + " differs";
  }
  fs::current_path(saved);
  fs::remove_all(dir);
  const int total = static_cast<int>(commands.size());
  return {identical == total,
          Fmt("%d/%d runs replayed byte-identically (%d artifacts)%s%s",
              identical, total, files, first_failure.empty() ? "" : "; ",
              first_failure.c_str())};
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace
}  // namespace sofic

int main() {
  using namespace sofic;
  const std::vector<Criterion> criteria = {
      {1, "boundary correspondence", 30.0, BoundaryCorrespondence},
      {2, "Cheeger sandwich", 120.0, CheegerSandwich},
      {3, "spectral anchors", 1.0, SpectralAnchors},
      {4, "automorphism-group recovery", 60.0, AutomorphismRecovery},
      {5, "improvement recovery", 300.0, ImprovementRecovery},
      {6, "dichotomy", 10.0, Dichotomy},
      {7, "LEF certificate", 60.0, LefCertificateCheck},
      {8, "sofic defects", 60.0, SoficDefects},
      {9, "determinism", 60.0, Determinism},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    const bool in_time = secs <= c.budget_seconds;
    const bool pass = o.pass && in_time;
    failed += !pass;
    std::printf("criterion %d %-28s %s  %s  [%.2fs / %.0fs%s]\n", c.id, c.name,
                pass ? "PASS" : "FAIL", o.detail.c_str(), secs,
                c.budget_seconds, in_time ? "" : " over budget");
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n",
              static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
