#include "mobius/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <vector>

#include "mobius/error.hpp"

namespace mobius {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

[[noreturn]] void parse_fail(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::parse_error, where.empty() ? what : "at '" + where + "': " + what);
}

json parse_document(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // nlohmann reports "... at line L, column C: ..." here.
    throw Error(ErrorCode::parse_error, e.what());
  }
}

const json& member(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.is_object()) parse_fail(where, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) parse_fail(where, "missing key '" + key + "'");
  return *it;
}

std::string join(const std::string& where, const std::string& key) {
  return where.empty() ? key : where + "." + key;
}

double number_at(const json& v, const std::string& where) {
  if (!v.is_number()) parse_fail(where, "expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) parse_fail(where, "value is not finite");
  return d;
}

Index index_at(const json& v, const std::string& where) {
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0) parse_fail(where, "expected a nonnegative integer index");
  return static_cast<Index>(v.get<std::uint64_t>());
}

Frame frame_from(const json& doc) {
  const json& arr = member(doc, "frame", "");
  if (!arr.is_array()) parse_fail("frame", "expected an array of labels");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (!arr[i].is_string()) parse_fail("frame[" + std::to_string(i) + "]", "expected a string label");
    labels.push_back(arr[i].get<std::string>());
  }
  try {
    return Frame(std::move(labels));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::capacity_exceeded) throw;
    parse_fail("frame", e.what());
  }
}

FiniteSet set_from(const json& doc, const std::string& key, const std::string& where) {
  const std::string path = join(where, key);
  const json& obj = member(doc, key, where);
  const json& size = member(obj, "size", path);
  if (!size.is_number_integer() || size.get<std::int64_t>() < 0) parse_fail(join(path, "size"), "expected a nonnegative integer");
  FiniteSet set(size.get<std::size_t>());
  if (const auto it = obj.find("id"); it != obj.end()) {
    if (!it->is_string()) parse_fail(join(path, "id"), "expected a string");
    set.id = it->get<std::string>();
  }
  if (const auto it = obj.find("labels"); it != obj.end()) {
    if (!it->is_array() || it->size() != set.size) parse_fail(join(path, "labels"), "expected one label per element");
    for (const auto& l : *it) {
      if (!l.is_string()) parse_fail(join(path, "labels"), "expected string labels");
      set.labels.push_back(l.get<std::string>());
    }
  }
  return set;
}

ordered_json set_to_json(const FiniteSet& set) {
  ordered_json j;
  j["size"] = set.size;
  if (!set.id.empty()) j["id"] = set.id;
  if (!set.labels.empty()) j["labels"] = set.labels;
  return j;
}

std::vector<Arrow> arrows_from(const json& doc, const std::string& where) {
  std::vector<Arrow> arrows;
  const auto it = doc.find("arrows");
  if (it == doc.end()) return arrows;
  const std::string path = join(where, "arrows");
  if (!it->is_array()) parse_fail(path, "expected an array of [source, target] pairs");
  for (std::size_t i = 0; i < it->size(); ++i) {
    const std::string item = path + "[" + std::to_string(i) + "]";
    const json& pair = (*it)[i];
    if (!pair.is_array() || pair.size() != 2) parse_fail(item, "expected [source, target]");
    arrows.push_back({index_at(pair[0], item), index_at(pair[1], item)});
  }
  return arrows;
}

template <class Build>
auto with_context(const std::string& where, Build build) -> decltype(build()) {
  try {
    return build();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::parse_error) throw;
    parse_fail(where, e.what());
  }
}

Graph graph_from(const json& doc, const std::string& where) {
  if (!doc.is_object()) parse_fail(where, "expected a graph object");
  FiniteSet source = set_from(doc, "source", where);
  FiniteSet target = set_from(doc, "target", where);
  if (doc.find("arrows") == doc.end()) parse_fail(where, "missing key 'arrows'");
  auto arrows = arrows_from(doc, where);
  return with_context(where, [&] { return Graph(std::move(source), std::move(target), std::move(arrows)); });
}

std::string format_number(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value);
  return buf;
}

}  // namespace

double round_significant(double value, int digits) {
  if (!std::isfinite(value)) return value;
  const double rounded = std::strtod(format_number(value, digits).c_str(), nullptr);
  return rounded == 0.0 ? 0.0 : rounded;
}

SetFunction parse_set_function(std::string_view text) {
  const json doc = parse_document(text);
  if (!doc.is_object()) parse_fail("", "expected a set-function object");
  Frame frame = frame_from(doc);

  ValueKind kind = ValueKind::raw;
  if (const auto it = doc.find("kind"); it != doc.end()) {
    if (!it->is_string()) parse_fail("kind", "expected a string");
    const auto parsed = parse_kind(it->get<std::string>());
    if (!parsed) parse_fail("kind", "unknown kind '" + it->get<std::string>() + "'");
    kind = *parsed;
  }

  const bool has_values = doc.contains("values");
  const bool has_dense = doc.contains("dense");
  if (has_values == has_dense) parse_fail("", "exactly one of 'values' and 'dense' must be present");

  SetFunction f(frame, kind);
  if (has_dense) {
    const json& dense = doc["dense"];
    if (!dense.is_array()) parse_fail("dense", "expected an array");
    if (dense.size() != f.size()) {
      parse_fail("dense", "expected " + std::to_string(f.size()) + " values, got " + std::to_string(dense.size()));
    }
    for (std::size_t i = 0; i < dense.size(); ++i) {
      f[static_cast<SubsetMask>(i)] = number_at(dense[i], "dense[" + std::to_string(i) + "]");
    }
    return f;
  }

  const json& values = doc["values"];
  if (!values.is_object()) parse_fail("values", "expected an object keyed by subset");
  std::vector<bool> seen(f.size(), false);
  for (const auto& [key, value] : values.items()) {
    const std::string where = "values." + key;
    SubsetMask mask = 0;
    try {
      mask = parse_subset_key(frame, key);
    } catch (const Error& e) {
      parse_fail(where, e.what());
    }
    if (seen[mask]) parse_fail(where, "subset listed more than once");
    seen[mask] = true;
    f[mask] = number_at(value, where);
  }
  return f;
}

SetFunction load_set_function(const std::filesystem::path& path) {
  try {
    return parse_set_function(read_text_file(path));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::parse_error) throw;
    throw Error(ErrorCode::parse_error, path.string() + ": " + e.what());
  }
}

std::string dump_set_function(const SetFunction& f, Layout layout, int digits) {
  ordered_json doc;
  doc["frame"] = f.frame().elements();
  doc["kind"] = std::string(kind_name(f.kind()));
  if (layout == Layout::dense) {
    ordered_json dense = ordered_json::array();
    for (double v : f.values()) dense.push_back(round_significant(v, digits));
    doc["dense"] = std::move(dense);
  } else {
    ordered_json values = ordered_json::object();
    for (std::size_t x = 0; x < f.size(); ++x) {
      const double v = round_significant(f[static_cast<SubsetMask>(x)], digits);
      if (v != 0.0) values[subset_key(f.frame(), static_cast<SubsetMask>(x))] = v;
    }
    doc["values"] = std::move(values);
  }
  return doc.dump(2) + "\n";
}

void save_set_function(const std::filesystem::path& path, const SetFunction& f, Layout layout, int digits) {
  write_text_file(path, dump_set_function(f, layout, digits));
}

Graph parse_graph(std::string_view text) { return graph_from(parse_document(text), ""); }

WeightedGraph parse_weighted_graph(std::string_view text) {
  const json doc = parse_document(text);
  if (!doc.is_object()) parse_fail("", "expected a weighted graph object");
  FiniteSet source = set_from(doc, "source", "");
  FiniteSet target = set_from(doc, "target", "");
  std::vector<WeightedArrow> entries;
  for (const auto& a : arrows_from(doc, "")) entries.push_back({a.source, a.target, 1.0});
  if (const auto it = doc.find("weights"); it != doc.end()) {
    if (!it->is_array()) parse_fail("weights", "expected an array of [source, target, weight]");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string item = "weights[" + std::to_string(i) + "]";
      const json& e = (*it)[i];
      if (!e.is_array() || e.size() != 3) parse_fail(item, "expected [source, target, weight]");
      entries.push_back({index_at(e[0], item), index_at(e[1], item), number_at(e[2], item)});
    }
  } else if (!doc.contains("arrows")) {
    parse_fail("", "missing key 'weights'");
  }
  return with_context("", [&] { return WeightedGraph(std::move(source), std::move(target), std::move(entries)); });
}

MAlgorithm parse_malgorithm(std::string_view text) {
  const json doc = parse_document(text);
  if (!doc.is_array()) parse_fail("", "expected an array of stage graphs");
  if (doc.empty()) parse_fail("", "an M-algorithm needs at least one stage");
  std::vector<Graph> stages;
  for (std::size_t i = 0; i < doc.size(); ++i) stages.push_back(graph_from(doc[i], "[" + std::to_string(i) + "]"));
  return with_context("", [&] { return MAlgorithm(std::move(stages)); });
}

namespace {

ordered_json graph_to_json(const Graph& g) {
  ordered_json j;
  j["source"] = set_to_json(g.source());
  j["target"] = set_to_json(g.target());
  ordered_json arrows = ordered_json::array();
  for (const auto& a : g.arrows()) arrows.push_back({a.source, a.target});
  j["arrows"] = std::move(arrows);
  return j;
}

}  // namespace

std::string dump_graph(const Graph& g) { return graph_to_json(g).dump() + "\n"; }

std::string dump_weighted_graph(const WeightedGraph& w, int digits) {
  ordered_json j;
  j["source"] = set_to_json(w.source());
  j["target"] = set_to_json(w.target());
  ordered_json weights = ordered_json::array();
  for (const auto& e : w.entries()) weights.push_back({e.source, e.target, round_significant(e.weight, digits)});
  j["weights"] = std::move(weights);
  return j.dump() + "\n";
}

std::string dump_malgorithm(const MAlgorithm& alg) {
  ordered_json doc = ordered_json::array();
  for (const auto& stage : alg.stages()) doc.push_back(graph_to_json(stage));
  return doc.dump() + "\n";
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io_error, "cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::io_error, "cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw Error(ErrorCode::io_error, "failed writing '" + path.string() + "'");
}

}  // namespace mobius
