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

#include "sofic/cli.h"

#include <chrono>
#include <filesystem>
#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "sofic/almost_auto.h"
#include "sofic/clusters.h"
#include "sofic/error.h"
#include "sofic/expansion.h"
#include "sofic/groups.h"
#include "sofic/io.h"
#include "sofic/sofic_report.h"

#ifndef SOFIC_VERSION
#define SOFIC_VERSION "0.0.0"
#endif

namespace sofic {

namespace {

namespace fs = std::filesystem;

struct Artifact {
  fs::path path;
  std::string content;
};

struct CommandResult {
  std::vector<Artifact> artifacts;
  std::string stdout_text;
  std::vector<std::string> inputs;
  int exit_code = 0;
};

struct GlobalOptions {
  std::uint64_t seed = 1;
  int threads = 1;
  std::string format = "json";
};

void Emit(CommandResult& r, const std::string& output, std::string content) {
  if (output.empty()) {
    r.stdout_text += content;
  } else {
    r.artifacts.push_back({output, std::move(content)});
  }
}

std::vector<std::string> SplitList(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<int> ParseIntList(const std::string& text) {
  std::vector<int> out;
  for (const std::string& item : SplitList(text)) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kInvalidArgument, "bad integer '" + item + "'");
    }
  }
  return out;
}

LabeledGraph LoadGraph(CommandResult& r, const std::string& path) {
  r.inputs.push_back(path);
  return ParseGraph(ReadTextFile(path));
}

// Options shared by improve, cluster-group and lef-check.
struct ImproveFlags {
  double kappa = 0.5;
  std::optional<double> alpha;
  int radius = 1;
  int steps = 10;
  std::string reference;
  int reference_vertex = 0;

  void Register(CLI::App* sub) {
    sub->add_option("--kappa", kappa, "Kazhdan constant in (0, 1]")
        ->capture_default_str();
    sub->add_option("--alpha", alpha,
                    "target |dU|/|U| (default: spectral Cheeger bound / 4)");
    sub->add_option("--radius", radius, "good-ball radius")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--steps", steps, "smoothing steps")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    sub->add_option("--reference", reference,
                    "graph whose ball is the model (default: the input graph)")
        ->check(CLI::ExistingFile);
    sub->add_option("--reference-vertex", reference_vertex,
                    "root of the model ball")
        ->capture_default_str();
  }

  ImprovementConfig Build(CommandResult& r, double delta) const {
    ImprovementConfig cfg;
    cfg.kappa = kappa;
    cfg.alpha = alpha;
    cfg.radius = radius;
    cfg.smoothing_steps = steps;
    cfg.target_delta = delta;
    if (!reference.empty()) {
      const LabeledGraph ref = LoadGraph(r, reference);
      cfg.reference_ball = MakeRootedBall(ref, reference_vertex, radius);
    }
    cfg.Validate();
    return cfg;
  }
};

std::string ManifestPath(const fs::path& artifact) {
  return artifact.string() + ".manifest.json";
}

Json CollectFlags(const CLI::App& app) {
  Json flags = Json::object();
  std::function<void(const CLI::App*)> visit = [&](const CLI::App* a) {
    for (const CLI::Option* opt : a->get_options()) {
      if (opt->count() == 0 || opt->get_name() == "--help") continue;
      const std::vector<std::string>& res = opt->results();
      std::string key = opt->get_name();
      if (a->get_parent() != nullptr) key = a->get_name() + "." + key;
      flags[key] = res.size() == 1 ? Json(res.front()) : Json(res);
    }
    for (const CLI::App* sub : a->get_subcommands()) visit(sub);
  };
  visit(&app);
  return flags;
}

std::string CommandName(const CLI::App& app) {
  std::string name;
  const CLI::App* cur = &app;
  while (!cur->get_subcommands().empty()) {
    cur = cur->get_subcommands().front();
    name += name.empty() ? cur->get_name() : " " + cur->get_name();
  }
  return name;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Sofic approximations: expansion, sofic defects, almost "
               "automorphisms and their cluster groups."};
  app.name("sofic");
  app.require_subcommand(1);
  GlobalOptions global;
  app.add_option("--seed", global.seed, "random seed")->capture_default_str();
  app.add_option("--threads", global.threads, "worker threads")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--format", global.format, "output format")
      ->capture_default_str()
      ->check(CLI::IsMember({"json"}));

  std::function<CommandResult()> action;

  // gen ---------------------------------------------------------------------
  CLI::App* gen = app.add_subcommand("gen", "generate labeled graphs");
  gen->require_subcommand(1);
  gen->fallthrough();

  std::string cay_group, cay_gens, cay_table, cay_out;
  CLI::App* cayley = gen->add_subcommand(
      "cayley", "Cayley graph of a preset (z<n>, s<n>, d<n>, A*B) or a table");
  cayley->fallthrough();
  auto* group_opt = cayley->add_option("--group", cay_group, "group preset");
  auto* table_opt = cayley->add_option("--table", cay_table,
                                       "JSON multiplication table file")
                        ->check(CLI::ExistingFile);
  group_opt->excludes(table_opt);
  cayley->add_option("--gens", cay_gens,
                     "comma-separated generator element indices");
  cayley->add_option("-o,--output", cay_out, "output graph file");
  cayley->callback([&] {
    action = [&] {
      CommandResult r;
      if (cay_group.empty() && cay_table.empty()) {
        throw Error(ErrorCode::kInvalidArgument, "need --group or --table");
      }
      LabeledGraph g;
      if (!cay_table.empty()) {
        r.inputs.push_back(cay_table);
        Json doc = Json::parse(ReadTextFile(cay_table));
        const Json& rows = doc.is_object() ? doc.at("table") : doc;
        const auto table = MultiplicationTable::Create(
            rows.get<std::vector<std::vector<int>>>(),
            static_cast<int>(rows.size()) <= kAssociativityCheckLimit);
        if (cay_gens.empty()) {
          throw Error(ErrorCode::kInvalidArgument, "--table needs --gens");
        }
        g = CayleyGraph(table, ParseIntList(cay_gens));
      } else {
        const GroupPreset preset = ParseGroupPreset(cay_group);
        g = cay_gens.empty() ? preset.Cayley()
                             : CayleyGraph(preset.table, ParseIntList(cay_gens));
      }
      Emit(r, cay_out, SerializeGraph(g));
      return r;
    };
  });

  int rnd_n = 0, rnd_pairs = 2;
  std::string rnd_out;
  CLI::App* random = gen->add_subcommand(
      "random", "random permutation model (sofic approximation of a free group)");
  random->fallthrough();
  random->add_option("--n", rnd_n, "vertex count")->required()->check(
      CLI::PositiveNumber);
  random->add_option("--pairs", rnd_pairs, "number of generator pairs")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  random->add_option("-o,--output", rnd_out, "output graph file");
  random->callback([&] {
    action = [&] {
      CommandResult r;
      Emit(r, rnd_out,
           SerializeGraph(RandomPermutationModel(rnd_n, rnd_pairs, global.seed)));
      return r;
    };
  });

  std::string rst_graph, rst_labels, rst_out;
  CLI::App* restrict = gen->add_subcommand(
      "restrict", "keep only the listed (inverse-closed) labels");
  restrict->fallthrough();
  restrict->add_option("graph", rst_graph, "graph file")
      ->required()
      ->check(CLI::ExistingFile);
  restrict->add_option("--labels", rst_labels, "comma-separated symbols")
      ->required();
  restrict->add_option("-o,--output", rst_out, "output graph file");
  restrict->callback([&] {
    action = [&] {
      CommandResult r;
      const LabeledGraph g = LoadGraph(r, rst_graph);
      const std::vector<std::string> labels = SplitList(rst_labels);
      Emit(r, rst_out, SerializeGraph(RestrictLabels(g, labels)));
      return r;
    };
  });

  // cheeger -----------------------------------------------------------------
  std::string ch_graph, ch_out;
  int ch_limit = kDefaultExhaustiveLimit, ch_max_iter = 10000;
  double ch_tol = 1e-10;
  CLI::App* cheeger = app.add_subcommand("cheeger", "Cheeger constant");
  cheeger->fallthrough();
  cheeger->add_option("graph", ch_graph, "graph file")
      ->required()
      ->check(CLI::ExistingFile);
  cheeger->add_option("--exact-limit", ch_limit,
                      "largest n solved exhaustively")
      ->capture_default_str();
  cheeger->add_option("--tol", ch_tol, "power iteration tolerance")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cheeger->add_option("--max-iter", ch_max_iter, "power iteration cap")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cheeger->add_option("-o,--output", ch_out, "report file");
  cheeger->callback([&] {
    action = [&] {
      CommandResult r;
      const LabeledGraph g = LoadGraph(r, ch_graph);
      const SpectralData sd = Lambda2(g, ch_tol, ch_max_iter, global.seed);
      const CheegerEstimate est =
          g.num_vertices() <= ch_limit
              ? CheegerExact(g, ch_limit, global.threads)
              : CheegerBounds(g, sd);
      Json doc = CheegerToJson(est, &sd);
      if (est.exact()) {
        const CheegerEstimate bounds = CheegerBounds(g, sd);
        doc["spectral_interval"] = {bounds.lower, bounds.upper};
      }
      Emit(r, ch_out, DumpJson(doc));
      return r;
    };
  });

  // sofic -------------------------------------------------------------------
  std::string so_graph, so_words, so_out;
  int so_max_len = 4;
  CLI::App* sofic_cmd = app.add_subcommand("sofic", "per-word sofic defects");
  sofic_cmd->fallthrough();
  sofic_cmd->add_option("graph", so_graph, "graph file")
      ->required()
      ->check(CLI::ExistingFile);
  auto* words_opt =
      sofic_cmd
          ->add_option("--words", so_words,
                       "word file: one word per line, letters separated by "
                       "spaces, leading '!' = not the identity")
          ->check(CLI::ExistingFile);
  sofic_cmd
      ->add_option("--max-len", so_max_len,
                   "without --words: all reduced words up to this length, "
                   "expected not to be the identity")
      ->capture_default_str()
      ->check(CLI::PositiveNumber)
      ->excludes(words_opt);
  sofic_cmd->add_option("-o,--output", so_out, "report file");
  sofic_cmd->callback([&] {
    action = [&] {
      CommandResult r;
      const LabeledGraph g = LoadGraph(r, so_graph);
      std::vector<Word> words;
      if (!so_words.empty()) {
        r.inputs.push_back(so_words);
        words = ParseWordList(ReadTextFile(so_words));
      } else {
        words = ReducedWords(g.generators(), so_max_len, false);
      }
      Emit(r, so_out, DumpJson(SoficReportToJson(MakeSoficReport(g, words))));
      return r;
    };
  });

  // improve -----------------------------------------------------------------
  std::string im_graph, im_map, im_out, im_trace;
  double im_delta = 0.0;
  ImproveFlags im_flags;
  CLI::App* improve = app.add_subcommand(
      "improve", "improve an almost automorphism by spectral rounding");
  improve->fallthrough();
  improve->add_option("graph", im_graph, "graph file")
      ->required()
      ->check(CLI::ExistingFile);
  improve->add_option("--map", im_map, "map file (one image per line)")
      ->required()
      ->check(CLI::ExistingFile);
  improve->add_option("--delta", im_delta, "target defect per vertex")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  im_flags.Register(improve);
  improve->add_option("-o,--output", im_out, "improved map file");
  improve->add_option("--trace", im_trace,
                      "trace file (default: <output>.trace.json)");
  improve->callback([&] {
    action = [&] {
      CommandResult r;
      const LabeledGraph g = LoadGraph(r, im_graph);
      r.inputs.push_back(im_map);
      const VertexMap c = ParseMap(ReadTextFile(im_map));
      const ImprovementConfig cfg = im_flags.Build(r, im_delta);
      const ImprovementResult res = Improve(g, c, cfg);
      if (im_out.empty()) {
        Json doc;
        doc["map"] = res.map.images();
        doc["trace"] = TraceToJson(res.trace);
        r.stdout_text = DumpJson(doc);
      } else {
        r.artifacts.push_back({im_out, SerializeMap(res.map)});
        r.artifacts.push_back(
            {im_trace.empty() ? im_out + ".trace.json" : im_trace,
             DumpJson(TraceToJson(res.trace))});
      }
      return r;
    };
  });

  // cluster-group -----------------------------------------------------------
  std::string cg_graph, cg_out;
  std::vector<std::string> cg_maps;
  bool cg_auto = false, cg_skip_distances = false;
  double cg_delta = 0.0;
  int cg_bound = 0;
  ImproveFlags cg_flags;
  CLI::App* cluster = app.add_subcommand(
      "cluster-group", "group of Hamming clusters of delta-almost automorphisms");
  cluster->fallthrough();
  cluster->add_option("graph", cg_graph, "graph file")
      ->required()
      ->check(CLI::ExistingFile);
  cluster->add_option("--maps", cg_maps, "seed map files")
      ->check(CLI::ExistingFile);
  cluster->add_flag("--automorphisms", cg_auto,
                    "seed with every exact automorphism (connected graphs)");
  cluster->add_option("--delta", cg_delta, "defect bound per vertex")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  cluster->add_option("--closure-bound", cg_bound,
                      "maximum number of classes (default 10 x seeds)")
      ->check(CLI::NonNegativeNumber);
  cluster->add_flag("--skip-associativity-distances", cg_skip_distances,
                    "skip the triple-wise Hamming associativity check");
  cg_flags.Register(cluster);
  cluster->add_option("-o,--output", cg_out, "report file");
  cluster->callback([&] {
    action = [&] {
      CommandResult r;
      const LabeledGraph g = LoadGraph(r, cg_graph);
      std::vector<VertexMap> seeds;
      for (const std::string& path : cg_maps) {
        r.inputs.push_back(path);
        seeds.push_back(ParseMap(ReadTextFile(path)));
      }
      if (cg_auto) {
        for (VertexMap& m : ExactAutomorphisms(g)) seeds.push_back(std::move(m));
      }
      ClusterGroupOptions options;
      options.closure_bound = cg_bound;
      options.check_associativity_distances = !cg_skip_distances;
      const ClusterGroup cg = BuildClusterGroup(
          g, cg_delta, seeds, cg_flags.Build(r, cg_delta), options);
      Emit(r, cg_out,
           DumpJson(ClusterGroupToJson(cg, ComputeGroupInvariants(cg))));
      return r;
    };
  });

  // lef-check ---------------------------------------------------------------
  std::string lef_graph, lef_gamma, lef_words, lef_out;
  double lef_delta = 0.0;
  ImproveFlags lef_flags;
  CLI::App* lef = app.add_subcommand(
      "lef-check", "certify that words over the other labels embed multiplicatively "
                   "into the cluster group of the gamma-label subgraph");
  lef->fallthrough();
  lef->add_option("graph", lef_graph, "graph file")
      ->required()
      ->check(CLI::ExistingFile);
  lef->add_option("--gamma", lef_gamma, "comma-separated gamma labels")
      ->required();
  lef->add_option("--words", lef_words, "file with the words of F")
      ->required()
      ->check(CLI::ExistingFile);
  lef->add_option("--delta", lef_delta, "defect bound per vertex")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  lef_flags.Register(lef);
  lef->add_option("-o,--output", lef_out, "certificate file");
  lef->callback([&] {
    action = [&] {
      CommandResult r;
      const LabeledGraph g = LoadGraph(r, lef_graph);
      r.inputs.push_back(lef_words);
      const std::vector<Word> words = ParseWordList(ReadTextFile(lef_words));
      const std::vector<std::string> gamma = SplitList(lef_gamma);
      const LefCertificate cert = CheckLef(g, gamma, words, lef_delta,
                                           lef_flags.Build(r, lef_delta));
      Emit(r, lef_out, DumpJson(LefCertificateToJson(cert)));
      r.exit_code = cert.certified ? 0 : 1;
      return r;
    };
  });

  // report ------------------------------------------------------------------
  std::string rep_graph, rep_out;
  CLI::App* report = app.add_subcommand("report", "summary of a graph file");
  report->fallthrough();
  report->add_option("graph", rep_graph, "graph file")
      ->required()
      ->check(CLI::ExistingFile);
  report->add_option("-o,--output", rep_out, "report file");
  report->callback([&] {
    action = [&] {
      CommandResult r;
      const LabeledGraph g = LoadGraph(r, rep_graph);
      Json doc;
      doc["n"] = g.num_vertices();
      doc["degree"] = g.degree();
      doc["generators"] = g.generators().names();
      doc["edges"] = g.NumEdges();
      doc["simple"] = g.IsSimple();
      doc["loops"] = g.HasLoops();
      const int components = g.NumComponents();
      doc["components"] = components;
      doc["connected"] = components == 1;
      if (g.num_vertices() >= 2) {
        const SpectralData sd = Lambda2(g, 1e-10, 10000, global.seed);
        const CheegerEstimate est = CheegerBounds(g, sd);
        doc["lambda2"] = sd.lambda2;
        doc["cheeger_interval"] = {est.lower, est.upper};
      }
      Emit(r, rep_out, DumpJson(doc));
      return r;
    };
  });

  // replay ------------------------------------------------------------------
  std::string replay_manifest;
  CLI::App* replay = app.add_subcommand("replay", "re-run a run manifest");
  replay->add_option("manifest", replay_manifest, "manifest file")
      ->required()
      ->check(CLI::ExistingFile);
  bool replaying = false;
  replay->callback([&] { replaying = true; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  if (replaying) {
    try {
      const Json manifest = Json::parse(ReadTextFile(replay_manifest));
      const auto argv = manifest.at("argv").get<std::vector<std::string>>();
      const fs::path cwd = fs::current_path();
      fs::current_path(manifest.at("working_directory").get<std::string>());
      const int code = RunCli(argv, out, err);
      fs::current_path(cwd);
      return code;
    } catch (const Error& e) {
      out << DumpJson(ErrorToJson(e));
      return 1;
    } catch (const std::exception& e) {
      out << DumpJson(ErrorToJson(Error(ErrorCode::kParseError, e.what())));
      return 1;
    }
  }

  const auto start = std::chrono::steady_clock::now();
  CommandResult result;
  try {
    result = action();
  } catch (const Error& e) {
    out << DumpJson(ErrorToJson(e));
    return 1;
  } catch (const std::exception& e) {
    out << DumpJson(ErrorToJson(Error(ErrorCode::kInvalidArgument, e.what())));
    return 1;
  }
  const double seconds = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - start)
                             .count();

  if (result.artifacts.empty()) {
    out << result.stdout_text;
    return result.exit_code;
  }
  // Refuse before writing anything, so a bad path never leaves half a run.
  for (const Artifact& a : result.artifacts) {
    const fs::path parent = a.path.parent_path();
    if (!parent.empty() && !fs::is_directory(parent)) {
      out << DumpJson(ErrorToJson(Error(
          ErrorCode::kIoError, "output directory " + parent.string() +
                                   " does not exist")));
      return 1;
    }
  }
  try {
    Json manifest;
    manifest["command"] = CommandName(app);
    manifest["argv"] = args;
    manifest["working_directory"] = fs::current_path().string();
    manifest["inputs"] = result.inputs;
    Json outputs = Json::array();
    for (const Artifact& a : result.artifacts) {
      WriteTextFile(a.path, a.content);
      outputs.push_back(a.path.string());
    }
    manifest["outputs"] = std::move(outputs);
    manifest["flags"] = CollectFlags(app);
    manifest["seed"] = global.seed;
    manifest["tool_version"] = SOFIC_VERSION;
    manifest["wall_time_seconds"] = seconds;
    WriteTextFile(ManifestPath(result.artifacts.front().path), DumpJson(manifest));
  } catch (const Error& e) {
    out << DumpJson(ErrorToJson(e));
    return 1;
  }
  return result.exit_code;
}

}  // namespace sofic
