#include "mobius/graph.hpp"

#include <algorithm>

#include "mobius/error.hpp"

namespace mobius {

bool same_set(const FiniteSet& a, const FiniteSet& b) noexcept {
  return a.size == b.size && (a.id.empty() || b.id.empty() || a.id == b.id);
}

namespace {

std::string describe(const FiniteSet& set) {
  std::string out = set.id.empty() ? std::string("set") : "set '" + set.id + "'";
  return out + " of size " + std::to_string(set.size);
}

void require_same(const FiniteSet& a, const FiniteSet& b, const char* what) {
  if (!same_set(a, b)) {
    throw Error(ErrorCode::set_mismatch,
                std::string(what) + ": " + describe(a) + " does not match " + describe(b));
  }
}

void require_length(std::span<const double> f, const FiniteSet& set) {
  if (f.size() != set.size) {
    throw Error(ErrorCode::dimension_mismatch, "input vector has length " +
                                                   std::to_string(f.size()) + ", expected " +
                                                   std::to_string(set.size));
  }
}

template <class Entry>
std::vector<std::size_t> build_rows(std::span<const Entry> sorted, std::size_t source_size) {
  std::vector<std::size_t> rows(source_size + 1, 0);
  for (const auto& e : sorted) ++rows[e.source + 1];
  for (std::size_t i = 0; i < source_size; ++i) rows[i + 1] += rows[i];
  return rows;
}

}  // namespace

Graph::Graph(FiniteSet source, FiniteSet target, std::vector<Arrow> arrows)
    : source_(std::move(source)), target_(std::move(target)), arrows_(std::move(arrows)) {
  for (const auto& a : arrows_) {
    if (a.source >= source_.size || a.target >= target_.size) {
      throw Error(ErrorCode::index_out_of_range,
                  "arrow (" + std::to_string(a.source) + ", " + std::to_string(a.target) +
                      ") lies outside " + std::to_string(source_.size) + " x " +
                      std::to_string(target_.size));
    }
  }
  if (!std::is_sorted(arrows_.begin(), arrows_.end())) std::sort(arrows_.begin(), arrows_.end());
  arrows_.erase(std::unique(arrows_.begin(), arrows_.end()), arrows_.end());
  row_begin_ = build_rows<Arrow>(arrows_, source_.size);
}

Graph Graph::identity(const FiniteSet& set) {
  std::vector<Arrow> arrows;
  arrows.reserve(set.size);
  for (Index i = 0; i < set.size; ++i) arrows.push_back({i, i});
  return Graph(set, set, std::move(arrows));
}

Graph Graph::empty(FiniteSet source, FiniteSet target) {
  return Graph(std::move(source), std::move(target), {});
}

std::span<const Arrow> Graph::out_arrows(Index s) const {
  if (s >= source_.size) {
    throw Error(ErrorCode::index_out_of_range, "source index " + std::to_string(s) + " out of range");
  }
  return std::span<const Arrow>(arrows_).subspan(row_begin_[s], row_begin_[s + 1] - row_begin_[s]);
}

bool Graph::contains(Index s, Index t) const {
  const auto row = out_arrows(s);
  return std::binary_search(row.begin(), row.end(), Arrow{s, t});
}

WeightedGraph::WeightedGraph(FiniteSet source, FiniteSet target, std::vector<WeightedArrow> entries)
    : source_(std::move(source)), target_(std::move(target)) {
  for (const auto& e : entries) {
    if (e.source >= source_.size || e.target >= target_.size) {
      throw Error(ErrorCode::index_out_of_range,
                  "weighted arrow (" + std::to_string(e.source) + ", " + std::to_string(e.target) +
                      ") lies outside " + std::to_string(source_.size) + " x " +
                      std::to_string(target_.size));
    }
  }
  const auto key_less = [](const WeightedArrow& a, const WeightedArrow& b) {
    return a.source != b.source ? a.source < b.source : a.target < b.target;
  };
  std::stable_sort(entries.begin(), entries.end(), key_less);
  entries_.reserve(entries.size());
  for (const auto& e : entries) {
    if (!entries_.empty() && entries_.back().source == e.source && entries_.back().target == e.target) {
      entries_.back().weight += e.weight;
    } else {
      entries_.push_back(e);
    }
  }
  std::erase_if(entries_, [](const WeightedArrow& e) { return e.weight == 0.0; });
  row_begin_ = build_rows<WeightedArrow>(entries_, source_.size);
}

WeightedGraph WeightedGraph::identity(const FiniteSet& set) {
  std::vector<WeightedArrow> entries;
  entries.reserve(set.size);
  for (Index i = 0; i < set.size; ++i) entries.push_back({i, i, 1.0});
  return WeightedGraph(set, set, std::move(entries));
}

std::span<const WeightedArrow> WeightedGraph::out_entries(Index s) const {
  if (s >= source_.size) {
    throw Error(ErrorCode::index_out_of_range, "source index " + std::to_string(s) + " out of range");
  }
  return std::span<const WeightedArrow>(entries_).subspan(row_begin_[s],
                                                           row_begin_[s + 1] - row_begin_[s]);
}

double WeightedGraph::weight(Index s, Index t) const {
  const auto row = out_entries(s);
  const auto it = std::lower_bound(row.begin(), row.end(), t,
                                   [](const WeightedArrow& e, Index v) { return e.target < v; });
  return (it != row.end() && it->target == t) ? it->weight : 0.0;
}

std::vector<double> WeightedGraph::dense() const {
  std::vector<double> m(source_.size * target_.size, 0.0);
  for (const auto& e : entries_) m[e.source * target_.size + e.target] = e.weight;
  return m;
}

MAlgorithm::MAlgorithm(std::vector<Graph> stages) : stages_(std::move(stages)) {
  if (stages_.empty()) throw Error(ErrorCode::dimension_mismatch, "an M-algorithm needs at least one stage");
  for (std::size_t i = 0; i + 1 < stages_.size(); ++i) {
    require_same(stages_[i].target(), stages_[i + 1].source(),
                 ("stage " + std::to_string(i + 1) + " -> " + std::to_string(i + 2)).c_str());
  }
}

WeightedMAlgorithm::WeightedMAlgorithm(std::vector<WeightedGraph> stages) : stages_(std::move(stages)) {
  if (stages_.empty()) throw Error(ErrorCode::dimension_mismatch, "an M-algorithm needs at least one stage");
  for (std::size_t i = 0; i + 1 < stages_.size(); ++i) {
    require_same(stages_[i].target(), stages_[i + 1].source(),
                 ("stage " + std::to_string(i + 1) + " -> " + std::to_string(i + 2)).c_str());
  }
}

std::vector<double> mobius_transform(const Graph& g, std::span<const double> f, OpCounter* counter) {
  require_length(f, g.source());
  std::vector<double> out(g.target().size, 0.0);
  std::vector<bool> touched(g.target().size, false);
  std::uint64_t additions = 0;
  for (const auto& a : g.arrows()) {
    if (touched[a.target]) {
      out[a.target] += f[a.source];
      ++additions;
    } else {
      out[a.target] = f[a.source];
      touched[a.target] = true;
    }
  }
  if (counter) counter->add_in_stage(additions);
  return out;
}

std::vector<double> mobius_transform_weighted(const WeightedGraph& w, std::span<const double> f,
                                              OpCounter* counter) {
  require_length(f, w.source());
  std::vector<double> out(w.target().size, 0.0);
  std::vector<bool> touched(w.target().size, false);
  std::uint64_t additions = 0;
  std::uint64_t multiplications = 0;
  for (const auto& e : w.entries()) {
    double term = f[e.source];
    if (e.weight != 1.0) {
      term *= e.weight;
      ++multiplications;
    }
    if (touched[e.target]) {
      out[e.target] += term;
      ++additions;
    } else {
      out[e.target] = term;
      touched[e.target] = true;
    }
  }
  if (counter) {
    counter->add_in_stage(additions);
    counter->multiply(multiplications);
  }
  return out;
}

Graph compose(const Graph& first, const Graph& second) {
  require_same(first.target(), second.source(), "compose");
  std::vector<Arrow> arrows;
  std::vector<std::size_t> stamp(second.target().size, 0);
  std::vector<Index> reached;
  for (Index s = 0; s < first.source().size; ++s) {
    reached.clear();
    for (const auto& a : first.out_arrows(s)) {
      for (const auto& b : second.out_arrows(a.target)) {
        if (stamp[b.target] != s + 1) {
          stamp[b.target] = s + 1;
          reached.push_back(b.target);
        }
      }
    }
    std::sort(reached.begin(), reached.end());
    for (Index u : reached) arrows.push_back({s, u});
  }
  return Graph(first.source(), second.target(), std::move(arrows));
}

WeightedGraph product_weighted(const WeightedGraph& a, const WeightedGraph& b) {
  require_same(a.target(), b.source(), "product");
  std::vector<WeightedArrow> entries;
  std::vector<double> acc(b.target().size, 0.0);
  std::vector<bool> hit(b.target().size, false);
  std::vector<Index> reached;
  for (Index s = 0; s < a.source().size; ++s) {
    reached.clear();
    for (const auto& x : a.out_entries(s)) {
      for (const auto& y : b.out_entries(x.target)) {
        if (!hit[y.target]) {
          hit[y.target] = true;
          reached.push_back(y.target);
        }
        acc[y.target] += x.weight * y.weight;
      }
    }
    std::sort(reached.begin(), reached.end());
    for (Index u : reached) {
      entries.push_back({s, u, acc[u]});
      acc[u] = 0.0;
      hit[u] = false;
    }
  }
  return WeightedGraph(a.source(), b.target(), std::move(entries));
}

WeightedGraph zeta(const Graph& g) {
  std::vector<WeightedArrow> entries;
  entries.reserve(g.arrow_count());
  for (const auto& a : g.arrows()) entries.push_back({a.source, a.target, 1.0});
  return WeightedGraph(g.source(), g.target(), std::move(entries));
}

Graph composite(const MAlgorithm& alg) {
  Graph result = alg.stages().front();
  for (const auto& stage : alg.stages().subspan(1)) result = compose(result, stage);
  return result;
}

WeightedGraph zeta_product(const MAlgorithm& alg) {
  WeightedGraph result = zeta(alg.stages().front());
  for (const auto& stage : alg.stages().subspan(1)) result = product_weighted(result, zeta(stage));
  return result;
}

std::vector<std::uint64_t> path_counts_from(const MAlgorithm& alg, Index s) {
  if (s >= alg.source().size) {
    throw Error(ErrorCode::index_out_of_range, "path source " + std::to_string(s) + " out of range");
  }
  std::vector<std::uint64_t> counts(alg.source().size, 0);
  counts[s] = 1;
  for (const auto& stage : alg.stages()) {
    std::vector<std::uint64_t> next(stage.target().size, 0);
    for (const auto& a : stage.arrows()) next[a.target] += counts[a.source];
    counts = std::move(next);
  }
  return counts;
}

std::uint64_t count_paths(const MAlgorithm& alg, Index s, Index t) {
  if (t >= alg.target().size) {
    throw Error(ErrorCode::index_out_of_range, "path target " + std::to_string(t) + " out of range");
  }
  return path_counts_from(alg, s)[t];
}

DecompositionCheck verify_decomposition(const MAlgorithm& alg) {
  // A positive path count means (s, t) lies in the composite, so the check
  // reduces to every count being 0 or 1.
  DecompositionCheck result;
  for (Index s = 0; s < alg.source().size; ++s) {
    const auto counts = path_counts_from(alg, s);
    for (Index t = 0; t < counts.size(); ++t) {
      if (counts[t] > 1) {
        result.valid = false;
        result.witness = Arrow{s, t};
        result.witness_path_count = counts[t];
        return result;
      }
    }
  }
  return result;
}

std::vector<double> apply_malgorithm(const MAlgorithm& alg, std::span<const double> f, OpCounter* counter) {
  require_length(f, alg.source());
  std::vector<double> current(f.begin(), f.end());
  for (const auto& stage : alg.stages()) {
    if (counter) counter->begin_stage();
    current = mobius_transform(stage, current, counter);
  }
  return current;
}

std::vector<double> apply_malgorithm(const WeightedMAlgorithm& alg, std::span<const double> f,
                                     OpCounter* counter) {
  require_length(f, alg.source());
  std::vector<double> current(f.begin(), f.end());
  for (const auto& stage : alg.stages()) {
    if (counter) counter->begin_stage();
    current = mobius_transform_weighted(stage, current, counter);
  }
  return current;
}

Graph transitive_closure(const Graph& g, bool reflexive) {
  require_same(g.source(), g.target(), "transitive closure");
  const Index k = static_cast<Index>(g.source().size);
  std::vector<Arrow> arrows;
  std::vector<Index> stack;
  std::vector<std::size_t> stamp(k, 0);
  for (Index s = 0; s < k; ++s) {
    std::vector<Index> reached;
    stack.assign(1, s);
    if (reflexive) {
      stamp[s] = s + 1;
      reached.push_back(s);
    }
    while (!stack.empty()) {
      const Index x = stack.back();
      stack.pop_back();
      for (const auto& a : g.out_arrows(x)) {
        if (stamp[a.target] != s + 1) {
          stamp[a.target] = s + 1;
          reached.push_back(a.target);
          stack.push_back(a.target);
        }
      }
    }
    std::sort(reached.begin(), reached.end());
    for (Index t : reached) arrows.push_back({s, t});
  }
  return Graph(g.source(), g.target(), std::move(arrows));
}

}  // namespace mobius
