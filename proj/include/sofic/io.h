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

#ifndef SOFIC_IO_H_
#define SOFIC_IO_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "sofic/almost_auto.h"
#include "sofic/clusters.h"
#include "sofic/core_graph.h"
#include "sofic/error.h"
#include "sofic/expansion.h"
#include "sofic/sofic_report.h"

namespace sofic {

using Json = nlohmann::ordered_json;

inline constexpr int kGraphFormatVersion = 1;

// Canonical graph document: generators sorted by name, one generator per
// line. ParseGraph(SerializeGraph(g)) re-serializes to the same bytes.
std::string SerializeGraph(const LabeledGraph& g);
// Throws kParseError for malformed documents and the LabeledGraph::Create
// errors for invalid permutations.
LabeledGraph ParseGraph(std::string_view text);

// One image per line.
std::string SerializeMap(const VertexMap& c);
VertexMap ParseMap(std::string_view text);

// One word per line in the ParseWord syntax; '#' starts a comment line.
std::vector<Word> ParseWordList(std::string_view text);

std::string ReadTextFile(const std::filesystem::path& path);
void WriteTextFile(const std::filesystem::path& path, std::string_view text);

Json VertexSetToJson(const VertexSet& s);
Json CheegerToJson(const CheegerEstimate& est, const SpectralData* sd);
Json SoficReportToJson(const SoficReport& report);
Json DefectReportToJson(const DefectReport& r);
Json TraceToJson(const ImprovementTrace& trace);
Json ClusterGroupToJson(const ClusterGroup& cg, const GroupInvariants& inv);
Json LefCertificateToJson(const LefCertificate& cert);
Json ErrorToJson(const Error& e);

// Pretty-printed with a trailing newline.
std::string DumpJson(const Json& doc);

}  // namespace sofic

#endif  // SOFIC_IO_H_
