#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "mobius/graph.hpp"
#include "mobius/set_function.hpp"

namespace mobius {

// Set-function documents:
//   {"frame": ["a","b","c"], "kind": "mass", "values": {"": 0.0, "a": 0.5, "a,b,c": 0.5}}
//   {"frame": [...], "kind": "...", "dense": [v_0, ..., v_(2^n - 1)]}
// Sparse keys are comma-joined member labels; omitted subsets are 0. A
// missing "kind" reads as raw. All failures are Error(parse_error) carrying
// the offending key or the line/column of a syntax error.
SetFunction parse_set_function(std::string_view text);
SetFunction load_set_function(const std::filesystem::path& path);

enum class Layout { sparse, dense };

inline constexpr int kSerializedDigits = 12;

// Values are rounded to `digits` significant digits. Sparse output lists
// nonzero cells only, keyed in subset-mask order with labels in frame order.
std::string dump_set_function(const SetFunction& f, Layout layout = Layout::sparse,
                              int digits = kSerializedDigits);
void save_set_function(const std::filesystem::path& path, const SetFunction& f,
                       Layout layout = Layout::sparse, int digits = kSerializedDigits);

double round_significant(double value, int digits);

// Graph documents:
//   {"source": {"size": k}, "target": {"size": m}, "arrows": [[s, t], ...]}
// Weighted graphs carry "weights": [[s, t, w], ...] instead of, or in
// addition to, "arrows" (arrows then weigh 1). Sets may also give "id" and
// "labels". An M-algorithm document is an array of stage objects.
Graph parse_graph(std::string_view text);
WeightedGraph parse_weighted_graph(std::string_view text);
MAlgorithm parse_malgorithm(std::string_view text);

std::string dump_graph(const Graph& g);
std::string dump_weighted_graph(const WeightedGraph& w, int digits = kSerializedDigits);
std::string dump_malgorithm(const MAlgorithm& alg);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace mobius
