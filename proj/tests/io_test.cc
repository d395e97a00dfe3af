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

#include <gtest/gtest.h>

#include <filesystem>
#include <random>

#include "sofic/groups.h"
#include "test_util.h"

namespace sofic {
namespace {

ErrorCode ParseCode(std::string_view text) {
  try {
    ParseGraph(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "parsed: " << text;
  return ErrorCode::kInvalidArgument;
}

TEST(GraphFormat, ExactLayout) {
  EXPECT_EQ(SerializeGraph(testing::Cycle(3)),
            "{\n"
            "  \"format_version\": 1,\n"
            "  \"n\": 3,\n"
            "  \"generators\": [\n"
            "    {\"name\": \"A\", \"inverse\": \"a\", \"perm\": [2,0,1]},\n"
            "    {\"name\": \"a\", \"inverse\": \"A\", \"perm\": [1,2,0]}\n"
            "  ]\n"
            "}\n");
}

TEST(GraphFormat, RoundTripIsByteStable) {
  std::mt19937 rng(71);
  for (int trial = 0; trial < 30; ++trial) {
    const LabeledGraph g = testing::RandomLabeledGraph(
        2 * (1 + trial % 7), trial % 3, trial % 2, rng);
    const std::string text = SerializeGraph(g);
    const LabeledGraph back = ParseGraph(text);
    EXPECT_EQ(SerializeGraph(back), text);
    EXPECT_EQ(back.num_vertices(), g.num_vertices());
    for (int s = 0; s < g.degree(); ++s) {
      const int t = back.generators().IndexOf(g.generators().name(s));
      EXPECT_EQ(back.action(t), g.action(s));
    }
  }
}

TEST(GraphFormat, Errors) {
  EXPECT_EQ(ParseCode("{"), ErrorCode::kParseError);
  EXPECT_EQ(ParseCode("[]"), ErrorCode::kParseError);
  EXPECT_EQ(ParseCode(R"({"format_version": 2, "n": 1, "generators": []})"),
            ErrorCode::kParseError);
  EXPECT_EQ(ParseCode(R"({"format_version": 1, "generators": []})"),
            ErrorCode::kParseError);
  EXPECT_EQ(ParseCode(R"({"format_version": 1, "n": 2, "generators": [
      {"name": "t", "inverse": "t", "perm": [1, 0]},
      {"name": "t", "inverse": "t", "perm": [1, 0]}]})"),
            ErrorCode::kParseError);
  EXPECT_EQ(ParseCode(R"({"format_version": 1, "n": 2, "generators": [
      {"name": "a", "inverse": "b", "perm": [1, 0]}]})"),
            ErrorCode::kParseError);
  EXPECT_EQ(ParseCode(R"({"format_version": 1, "n": 2, "generators": [
      {"name": "t", "inverse": "t", "perm": [0, 0]}]})"),
            ErrorCode::kNotAPermutation);
  EXPECT_EQ(ParseCode(R"({"format_version": 1, "n": 3, "generators": [
      {"name": "a", "inverse": "A", "perm": [1, 2, 0]},
      {"name": "A", "inverse": "a", "perm": [1, 2, 0]}]})"),
            ErrorCode::kInversePairMismatch);
  EXPECT_EQ(ParseCode(R"({"format_version": 1, "n": 3, "generators": [
      {"name": "t", "inverse": "t", "perm": [1, 0]}]})"),
            ErrorCode::kLengthMismatch);
}

TEST(MapFormat, RoundTripAndErrors) {
  const VertexMap c({2, 0, 1, 1});
  EXPECT_EQ(SerializeMap(c), "2\n0\n1\n1\n");
  EXPECT_EQ(ParseMap(SerializeMap(c)), c);
  EXPECT_EQ(ParseMap("1 0"), VertexMap({1, 0}));
  EXPECT_THROW(ParseMap("1\nx\n"), Error);
  EXPECT_THROW(ParseMap("-1\n"), Error);
  EXPECT_THROW(ParseMap("0\n5\n"), Error);  // image out of range
}

TEST(WordList, CommentsAndBlankLines) {
  const std::vector<Word> words =
      ParseWordList("# header\n()\na b\n\n  # indented comment\n!a a\n");
  ASSERT_EQ(words.size(), 3u);
  EXPECT_TRUE(words[0].letters.empty());
  EXPECT_EQ(words[1].letters, (std::vector<std::string>{"a", "b"}));
  EXPECT_FALSE(words[2].expects_identity);
}

TEST(Files, ReadWriteAndMissing) {
  const auto dir = std::filesystem::temp_directory_path() / "sofic_io_test";
  std::filesystem::create_directories(dir);
  WriteTextFile(dir / "x.txt", "hello\n");
  EXPECT_EQ(ReadTextFile(dir / "x.txt"), "hello\n");
  try {
    ReadTextFile(dir / "missing.txt");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIoError);
  }
  std::filesystem::remove_all(dir);
}

TEST(JsonDocs, ErrorAndCheeger) {
  const Json err = ErrorToJson(Error(ErrorCode::kNotBijective, "boom"));
  EXPECT_EQ(err["status"], "error");
  EXPECT_EQ(err["error"], "NotBijective");
  EXPECT_EQ(err["message"], "boom");
  const LabeledGraph g = testing::Cycle(6);
  const Json exact = CheegerToJson(CheegerExact(g), nullptr);
  EXPECT_EQ(exact["kind"], "exact");
  EXPECT_EQ(exact["witness"], Json::parse("[0, 1, 2]"));
  const SpectralData sd = Lambda2(g);
  const Json bounds = CheegerToJson(CheegerBounds(g, sd), &sd);
  EXPECT_EQ(bounds["kind"], "interval");
  EXPECT_EQ(bounds["interval"].size(), 2u);
  EXPECT_TRUE(bounds.contains("lambda2"));
  EXPECT_EQ(DumpJson(Json::object()), "{}\n");
}

}  // namespace
}  // namespace sofic
