#include <gtest/gtest.h>

#include <filesystem>
#include <random>

#include "mobius/error.hpp"
#include "mobius/fast_transforms.hpp"
#include "mobius/io.hpp"
#include "mobius/random.hpp"

namespace mobius {
namespace {

std::string parse_message(std::string_view text) {
  try {
    parse_set_function(text);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::parse_error) << e.what();
    return e.what();
  }
  ADD_FAILURE() << "expected a parse error";
  return "";
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

TEST(ParseSetFunction, Sparse) {
  const auto f = parse_set_function(
      R"({"frame": ["a","b","c"], "kind": "mass", "values": {"a": 0.2, "c, b": 0.3, "a,b,c": 0.5}})");
  EXPECT_EQ(f.kind(), ValueKind::mass);
  EXPECT_EQ(f.size(), 8u);
  EXPECT_EQ(f[1], 0.2);
  EXPECT_EQ(f[6], 0.3);
  EXPECT_EQ(f[7], 0.5);
  EXPECT_EQ(f[0], 0.0);
}

TEST(ParseSetFunction, DenseAndDefaultKind) {
  const auto f = parse_set_function(R"({"frame": ["x","y"], "dense": [0, 0.25, 0.25, 0.5]})");
  EXPECT_EQ(f.kind(), ValueKind::raw);
  EXPECT_EQ(f[3], 0.5);
  EXPECT_EQ(parse_set_function(R"({"frame": ["x"], "kind": "q", "dense": [1, 1]})").kind(), ValueKind::commonality);
}

TEST(ParseSetFunction, ErrorsNameTheKey) {
  EXPECT_TRUE(contains(parse_message(R"({"frame": ["a"], "values": {"z": 1}})"), "values.z"));
  EXPECT_TRUE(contains(parse_message(R"({"frame": ["a","b"], "values": {"a,b": 1, "b,a": 2}})"), "more than once"));
  EXPECT_TRUE(contains(parse_message(R"({"frame": ["a"], "values": {"a": "x"}})"), "values.a"));
  EXPECT_TRUE(contains(parse_message(R"({"frame": ["a"], "dense": [1]})"), "dense"));
  EXPECT_TRUE(contains(parse_message(R"({"frame": ["a"], "kind": "belief2", "dense": [0, 1]})"), "kind"));
  EXPECT_TRUE(contains(parse_message(R"({"frame": ["a","a"], "dense": [0,0,0,0]})"), "frame"));
  EXPECT_TRUE(contains(parse_message(R"({"values": {}})"), "frame"));
  EXPECT_TRUE(contains(parse_message(R"({"frame": ["a"]})"), "values"));
  EXPECT_TRUE(contains(parse_message(R"({"frame": ["a"], "values": {}, "dense": [0, 0]})"), "values"));
}

TEST(ParseSetFunction, SyntaxErrorReportsPosition) {
  const std::string msg = parse_message("{\n  \"frame\": [\"a\"],\n  \"values\": {\"a\": 1,}\n}");
  EXPECT_TRUE(contains(msg, "line 3")) << msg;
}

TEST(ParseSetFunction, CapacityIsNotAParseError) {
  std::string labels;
  for (int i = 0; i < 31; ++i) labels += (i ? ",\"e" : "\"e") + std::to_string(i) + "\"";
  try {
    parse_set_function("{\"frame\": [" + labels + "], \"values\": {}}");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::capacity_exceeded);
  }
}

TEST(DumpSetFunction, SparseOrderingAndRounding) {
  SetFunction f(Frame({"a", "b", "c"}), ValueKind::belief, {0, 0.2, 0, 0.1 + 0.1, 0, 0, 0.3, 1.0000000000001});
  const std::string text = dump_set_function(f);
  EXPECT_EQ(text,
            "{\n"
            "  \"frame\": [\n    \"a\",\n    \"b\",\n    \"c\"\n  ],\n"
            "  \"kind\": \"belief\",\n"
            "  \"values\": {\n"
            "    \"a\": 0.2,\n"
            "    \"a,b\": 0.2,\n"
            "    \"b,c\": 0.3,\n"
            "    \"a,b,c\": 1.0\n"
            "  }\n"
            "}\n");
}

TEST(DumpSetFunction, RoundTrip) {
  std::mt19937_64 rng(51);
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto f = random_function(Frame::numbered(n), rng);
    for (auto layout : {Layout::sparse, Layout::dense}) {
      const auto back = parse_set_function(dump_set_function(f, layout));
      EXPECT_EQ(back.frame(), f.frame());
      EXPECT_EQ(back.kind(), f.kind());
      for (SubsetMask x = 0; x < f.size(); ++x) EXPECT_EQ(back[x], round_significant(f[x], kSerializedDigits));
    }
  }
}

TEST(RoundSignificant, Examples) {
  EXPECT_EQ(round_significant(0.1 + 0.2, 12), 0.3);
  EXPECT_EQ(round_significant(-1e-20, 3), -1e-20);
  EXPECT_EQ(round_significant(123456.789, 3), 123000.0);
  EXPECT_FALSE(std::signbit(round_significant(-0.0, 12)));
}

TEST(GraphIo, RoundTrip) {
  const auto h = hasse_sequence(3, Relation::subset, true);
  const auto back = parse_malgorithm(dump_malgorithm(h));
  ASSERT_EQ(back.stage_count(), 3u);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(back.stages()[i], h.stages()[i]);

  const Graph g = inclusion_graph(2, Relation::superset, false);
  EXPECT_EQ(parse_graph(dump_graph(g)), g);

  const WeightedGraph w(FiniteSet(2), FiniteSet(3), {{0, 2, -1.5}, {1, 0, 1.0}});
  const auto wb = parse_weighted_graph(dump_weighted_graph(w));
  EXPECT_EQ(wb.dense(), w.dense());
}

TEST(GraphIo, Errors) {
  auto code = [](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return std::pair{e.code(), std::string(e.what())};
    }
    return std::pair{ErrorCode::io_error, std::string("no error")};
  };
  const auto out_of_range =
      code([] { parse_graph(R"({"source": {"size": 2}, "target": {"size": 2}, "arrows": [[0, 5]]})"); });
  EXPECT_EQ(out_of_range.first, ErrorCode::parse_error);
  const auto bad_pair =
      code([] { parse_graph(R"({"source": {"size": 2}, "target": {"size": 2}, "arrows": [[0]]})"); });
  EXPECT_TRUE(contains(bad_pair.second, "arrows[0]"));
  const auto mismatch = code([] {
    parse_malgorithm(R"([{"source": {"size": 2}, "target": {"size": 3}, "arrows": []},
                         {"source": {"size": 2}, "target": {"size": 2}, "arrows": []}])");
  });
  EXPECT_NE(mismatch.first, ErrorCode::io_error);
}

TEST(Files, MissingFileIsIoError) {
  try {
    load_set_function(std::filesystem::temp_directory_path() / "mobius-no-such-file.json");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::io_error);
  }
}

TEST(Files, SaveAndLoad) {
  const auto path = std::filesystem::temp_directory_path() / "mobius-io-test.json";
  const SetFunction f(Frame({"p", "q"}), ValueKind::mass, {0, 0.5, 0, 0.5});
  save_set_function(path, f);
  const auto back = load_set_function(path);
  EXPECT_EQ(back.kind(), ValueKind::mass);
  EXPECT_EQ(back[1], 0.5);
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace mobius
