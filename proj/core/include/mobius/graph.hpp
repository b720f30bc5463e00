#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mobius/op_counter.hpp"

namespace mobius {

using Index = std::uint32_t;

// Finite set {0, ..., size-1}. The id is optional; two sets are considered the
// same when their sizes match and their ids match or either id is empty.
struct FiniteSet {
  std::string id;
  std::size_t size = 0;
  std::vector<std::string> labels;  // empty, or exactly `size` entries

  FiniteSet() = default;
  explicit FiniteSet(std::size_t n, std::string name = {}) : id(std::move(name)), size(n) {}
};

bool same_set(const FiniteSet& a, const FiniteSet& b) noexcept;

struct Arrow {
  Index source;
  Index target;
  auto operator<=>(const Arrow&) const = default;
};

// Directed graph from S to T, i.e. a subset of S x T.
class Graph {
 public:
  // Arrows are sorted and deduplicated. Throws Error(index_out_of_range) for
  // endpoints outside S or T.
  Graph(FiniteSet source, FiniteSet target, std::vector<Arrow> arrows);

  static Graph identity(const FiniteSet& set);
  static Graph empty(FiniteSet source, FiniteSet target);

  const FiniteSet& source() const noexcept { return source_; }
  const FiniteSet& target() const noexcept { return target_; }

  // Sorted by (source, target).
  std::span<const Arrow> arrows() const noexcept { return arrows_; }
  std::size_t arrow_count() const noexcept { return arrows_.size(); }
  std::span<const Arrow> out_arrows(Index s) const;
  bool contains(Index s, Index t) const;

  bool operator==(const Graph& other) const {
    return same_set(source_, other.source_) && same_set(target_, other.target_) &&
           arrows_ == other.arrows_;
  }

 private:
  FiniteSet source_;
  FiniteSet target_;
  std::vector<Arrow> arrows_;
  std::vector<std::size_t> row_begin_;  // size #S + 1
};

struct WeightedArrow {
  Index source;
  Index target;
  double weight;
};

// Sparse real-valued incidence function on S x T. Absent pairs weigh 0.
class WeightedGraph {
 public:
  // Entries are sorted; repeated pairs are summed and zero weights pruned.
  WeightedGraph(FiniteSet source, FiniteSet target, std::vector<WeightedArrow> entries);

  // Kronecker delta of a set.
  static WeightedGraph identity(const FiniteSet& set);

  const FiniteSet& source() const noexcept { return source_; }
  const FiniteSet& target() const noexcept { return target_; }

  std::span<const WeightedArrow> entries() const noexcept { return entries_; }
  std::span<const WeightedArrow> out_entries(Index s) const;
  double weight(Index s, Index t) const;

  // Row-major #S x #T matrix.
  std::vector<double> dense() const;

 private:
  FiniteSet source_;
  FiniteSet target_;
  std::vector<WeightedArrow> entries_;
  std::vector<std::size_t> row_begin_;
};

// Sequence of queueing graphs S0 -> S1 -> ... -> Sn.
class MAlgorithm {
 public:
  // Throws Error(set_mismatch) when a stage's target is not the next stage's
  // source, Error(dimension_mismatch) when there are no stages.
  explicit MAlgorithm(std::vector<Graph> stages);

  std::span<const Graph> stages() const noexcept { return stages_; }
  std::size_t stage_count() const noexcept { return stages_.size(); }
  const FiniteSet& source() const noexcept { return stages_.front().source(); }
  const FiniteSet& target() const noexcept { return stages_.back().target(); }

 private:
  std::vector<Graph> stages_;
};

class WeightedMAlgorithm {
 public:
  explicit WeightedMAlgorithm(std::vector<WeightedGraph> stages);

  std::span<const WeightedGraph> stages() const noexcept { return stages_; }
  std::size_t stage_count() const noexcept { return stages_.size(); }
  const FiniteSet& source() const noexcept { return stages_.front().source(); }
  const FiniteSet& target() const noexcept { return stages_.back().target(); }

 private:
  std::vector<WeightedGraph> stages_;
};

// out[t] = sum of f[s] over arrows (s, t); empty preimages give 0. A target
// with k preimages costs k - 1 additions.
std::vector<double> mobius_transform(const Graph& g, std::span<const double> f,
                                     OpCounter* counter = nullptr);

// out[t] = sum over s of f[s] * w(s, t). Entries of weight 1 need no
// multiplication; every other entry counts one.
std::vector<double> mobius_transform_weighted(const WeightedGraph& w, std::span<const double> f,
                                              OpCounter* counter = nullptr);

// Relational composition: (s, u) iff some t has (s, t) in first, (t, u) in second.
Graph compose(const Graph& first, const Graph& second);

// (a * b)(s, u) = sum over t of a(s, t) * b(t, u).
WeightedGraph product_weighted(const WeightedGraph& a, const WeightedGraph& b);

// 0/1 incidence function of a graph.
WeightedGraph zeta(const Graph& g);

// Composite graph C(alg) = G_n o ... o G_1.
Graph composite(const MAlgorithm& alg);

// Iterated product of the stage zeta functions.
WeightedGraph zeta_product(const MAlgorithm& alg);

// Number of paths (g_1, ..., g_n) in G_1 x ... x G_n from s to every target.
// Staged forward accumulation.
std::vector<std::uint64_t> path_counts_from(const MAlgorithm& alg, Index s);
std::uint64_t count_paths(const MAlgorithm& alg, Index s, Index t);

struct DecompositionCheck {
  bool valid = true;
  // First pair, in (s, t) order, whose path count differs from 1.
  std::optional<Arrow> witness;
  std::uint64_t witness_path_count = 0;
};

// An M-algorithm computes the Mobius transform of its composite iff every
// composite arrow factors through the stages in exactly one way.
DecompositionCheck verify_decomposition(const MAlgorithm& alg);

std::vector<double> apply_malgorithm(const MAlgorithm& alg, std::span<const double> f,
                                     OpCounter* counter = nullptr);
std::vector<double> apply_malgorithm(const WeightedMAlgorithm& alg, std::span<const double> f,
                                     OpCounter* counter = nullptr);

// Transitive closure of a graph on one set, optionally adding all loops.
Graph transitive_closure(const Graph& g, bool reflexive);

}  // namespace mobius
