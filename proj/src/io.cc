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

#include "sofic/io.h"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "sofic/error.h"

namespace sofic {

std::string SerializeGraph(const LabeledGraph& g) {
  const GeneratorSet& gens = g.generators();
  std::vector<int> order(gens.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return gens.name(a) < gens.name(b); });
  std::string out = "{\n  \"format_version\": " +
                    std::to_string(kGraphFormatVersion) +
                    ",\n  \"n\": " + std::to_string(g.num_vertices()) +
                    ",\n  \"generators\": [";
  for (std::size_t i = 0; i < order.size(); ++i) {
    const int s = order[i];
    out += i == 0 ? "\n" : ",\n";
    out += "    {\"name\": " + Json(gens.name(s)).dump() +
           ", \"inverse\": " + Json(gens.name(gens.inverse(s))).dump() +
           ", \"perm\": [";
    const Permutation& p = g.action(s);
    for (std::size_t x = 0; x < p.size(); ++x) {
      if (x > 0) out += ',';
      out += std::to_string(p[x]);
    }
    out += "]}";
  }
  out += order.empty() ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

LabeledGraph ParseGraph(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::kParseError, std::string("graph file: ") + e.what());
  }
  try {
    if (!doc.is_object()) throw Error(ErrorCode::kParseError, "not an object");
    if (doc.at("format_version").get<int>() != kGraphFormatVersion) {
      throw Error(ErrorCode::kParseError, "unsupported format_version");
    }
    const int n = doc.at("n").get<int>();
    if (n < 0) throw Error(ErrorCode::kParseError, "negative n");
    std::vector<std::pair<std::string, std::string>> entries;
    std::vector<Permutation> actions;
    std::set<std::string> names;
    for (const Json& gen : doc.at("generators")) {
      std::string name = gen.at("name").get<std::string>();
      if (!names.insert(name).second) {
        throw Error(ErrorCode::kParseError,
                    "generator '" + name + "' listed twice");
      }
      entries.emplace_back(name, gen.at("inverse").get<std::string>());
      actions.push_back(gen.at("perm").get<Permutation>());
    }
    for (const auto& [name, inv] : entries) {
      if (!names.contains(inv)) {
        throw Error(ErrorCode::kParseError, "inverse '" + inv + "' of '" +
                                                name + "' is not listed");
      }
    }
    GeneratorSet gens;
    try {
      gens = GeneratorSet::FromInverseNames(entries);
    } catch (const Error& e) {
      throw Error(ErrorCode::kParseError, e.what());
    }
    return LabeledGraph::Create(n, std::move(gens), std::move(actions));
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("graph file: ") + e.what());
  }
}

std::string SerializeMap(const VertexMap& c) {
  std::string out;
  for (Vertex y : c.images()) {
    out += std::to_string(y);
    out += '\n';
  }
  return out;
}

VertexMap ParseMap(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<Vertex> images;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size() || value < 0 || value > INT32_MAX) {
      throw Error(ErrorCode::kParseError, "bad map entry '" + token + "'");
    }
    images.push_back(static_cast<Vertex>(value));
  }
  return VertexMap(std::move(images));
}

std::vector<Word> ParseWordList(std::string_view text) {
  std::vector<Word> words;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    words.push_back(ParseWord(line));
  }
  return words;
}

std::string ReadTextFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteTextFile(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw Error(ErrorCode::kIoError, "short write to " + path.string());
}

Json VertexSetToJson(const VertexSet& s) {
  Json arr = Json::array();
  for (std::int64_t v : s.Elements()) arr.push_back(v);
  return arr;
}

Json CheegerToJson(const CheegerEstimate& est, const SpectralData* sd) {
  Json doc;
  doc["kind"] = est.exact() ? "exact" : "interval";
  if (est.exact()) {
    doc["value"] = est.value();
  } else {
    doc["interval"] = {est.lower, est.upper};
  }
  doc["witness_boundary"] = est.witness_boundary;
  doc["witness_size"] = est.witness_size;
  doc["witness"] = VertexSetToJson(est.witness);
  if (sd != nullptr) {
    doc["lambda2"] = sd->lambda2;
    doc["iterations"] = sd->iterations;
    doc["residual"] = sd->residual;
    doc["converged"] = sd->converged;
  }
  return doc;
}

Json SoficReportToJson(const SoficReport& report) {
  Json doc;
  doc["n"] = report.n;
  doc["max_defect"] = report.max_defect;
  Json words = Json::array();
  for (const WordDefect& wd : report.words) {
    Json w;
    w["word"] = FormatWord(wd.word);
    w["expects_identity"] = wd.word.expects_identity;
    w["violations"] = wd.violations;
    w["defect"] = wd.defect;
    words.push_back(std::move(w));
  }
  doc["words"] = std::move(words);
  return doc;
}

Json DefectReportToJson(const DefectReport& r) {
  Json doc;
  doc["bad_edges"] = r.bad_edges;
  doc["epsilon"] = r.epsilon;
  doc["boundary_of_graph"] = r.boundary_of_graph;
  doc["simple"] = r.simple;
  doc["lemma_holds"] = r.lemma_holds;
  return doc;
}

Json TraceToJson(const ImprovementTrace& t) {
  Json doc;
  doc["good_pairs"] = t.good_pairs;
  doc["t_size"] = t.t_size;
  doc["t_boundary"] = t.t_boundary;
  doc["budget"] = t.budget;
  doc["u_size"] = t.u_size;
  doc["u_boundary"] = t.u_boundary;
  doc["symmetric_difference"] = t.symmetric_difference;
  doc["removed_pairs"] = t.removed_pairs;
  doc["added_pairs"] = t.added_pairs;
  doc["fibers_repaired"] = t.fibers_repaired;
  doc["hamming_moved"] = t.hamming_moved;
  doc["alpha"] = t.alpha;
  doc["alpha_attained"] = t.alpha_attained;
  doc["feasible_prefix"] = t.feasible_prefix;
  doc["reverted"] = t.reverted;
  doc["target_met"] = t.target_met;
  doc["empirical_c"] = t.empirical_c ? Json(*t.empirical_c) : Json(nullptr);
  doc["initial"] = DefectReportToJson(t.initial);
  doc["final"] = DefectReportToJson(t.final);
  doc["warnings"] = t.warnings;
  return doc;
}

Json ClusterGroupToJson(const ClusterGroup& cg, const GroupInvariants& inv) {
  Json doc;
  doc["status"] = "ok";
  doc["group_order"] = inv.order;
  doc["element_orders"] = inv.element_orders;
  doc["abelian"] = inv.abelian;
  doc["identity_index"] = cg.identity_index;
  doc["inverse_map"] = cg.inverse_map;
  doc["table"] = cg.table;
  Json clusters = Json::array();
  for (const Cluster& c : cg.clusters) {
    Json cl;
    cl["members"] = c.members.size();
    cl["representative"] = c.representative.images();
    clusters.push_back(std::move(cl));
  }
  doc["clusters"] = std::move(clusters);
  return doc;
}

Json LefCertificateToJson(const LefCertificate& cert) {
  Json doc;
  doc["status"] = cert.certified ? "certified"
                                 : std::string(ErrorCodeName(cert.failure));
  doc["group_order"] = cert.invariants.order;
  doc["element_orders"] = cert.invariants.element_orders;
  doc["abelian"] = cert.invariants.abelian;
  doc["table"] = cert.group.table;
  if (cert.certified) {
    Json witnesses = Json::array();
    for (std::size_t i = 0; i < cert.f_words.size(); ++i) {
      Json w;
      w["word"] = FormatWord(cert.f_words[i]);
      w["cluster"] = cert.f_clusters[i];
      w["defect"] = cert.f_defects[i];
      witnesses.push_back(std::move(w));
    }
    doc["witnesses"] = std::move(witnesses);
    Json products = Json::array();
    for (std::size_t i = 0; i < cert.ff_words.size(); ++i) {
      Json w;
      w["word"] = FormatWord(cert.ff_words[i]);
      w["cluster"] = cert.ff_clusters[i];
      products.push_back(std::move(w));
    }
    doc["products"] = std::move(products);
  } else {
    doc["violations"] = cert.violations;
  }
  return doc;
}

Json ErrorToJson(const Error& e) {
  Json doc;
  doc["status"] = "error";
  doc["error"] = std::string(ErrorCodeName(e.code()));
  doc["message"] = e.what();
  return doc;
}

std::string DumpJson(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace sofic
