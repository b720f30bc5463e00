#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "mobius/graph.hpp"
#include "mobius/op_counter.hpp"
#include "mobius/set_function.hpp"

namespace mobius {

enum class TransformKind {
  mass_to_bel,       // bel(A) = sum of m(X), X subset of A, X nonempty
  mass_to_bel_full,  // same sum including X = empty
  bel_to_mass,
  mass_to_q,  // Q(A) = sum of m(X), X superset of A
  q_to_mass,
  q_to_pl,  // Pl(A) = |sum of (-1)^#(A-X) Q(X), X subset of A, X nonempty|
};

std::string_view transform_name(TransformKind kind) noexcept;
ValueKind input_kind(TransformKind kind) noexcept;
ValueKind output_kind(TransformKind kind) noexcept;

// In-place kernels over a buffer of 2^n values indexed by subset mask. Pass i
// touches every pair (Y without a_i, Y with a_i). Throws
// Error(dimension_mismatch) unless the length is a power of two.
namespace kernel {

// v[Y] += v[Y - a_i] for Y containing a_i.
void subset_sum(std::span<double> v, OpCounter* counter = nullptr);
// As subset_sum with the empty set suppressed as a source; v[empty] ends at 0.
void subset_sum_nonempty(std::span<double> v, OpCounter* counter = nullptr);
// v[Y] -= v[Y - a_i] for Y containing a_i. Inverse of subset_sum.
void subset_difference(std::span<double> v, OpCounter* counter = nullptr);
void subset_difference_nonempty(std::span<double> v, OpCounter* counter = nullptr);
// v[Y] += v[Y + a_i] for Y not containing a_i.
void superset_sum(std::span<double> v, OpCounter* counter = nullptr);
// v[Y] -= v[Y + a_i] for Y not containing a_i. Inverse of superset_sum.
void superset_difference(std::span<double> v, OpCounter* counter = nullptr);

}  // namespace kernel

// Fast transforms: n in-place passes, n * 2^(n-1) additions for the full
// variants and n * (2^(n-1) - 1) when the empty set is excluded as a source.
// Inputs must carry the expected tag or `raw` (raw in, raw out); anything
// else is Error(unsupported_conversion).
SetFunction fmt_mass_to_bel(const SetFunction& m, bool include_empty, OpCounter* counter = nullptr);
SetFunction fmt_bel_to_mass(const SetFunction& bel, OpCounter* counter = nullptr);
SetFunction fmt_mass_to_q(const SetFunction& m, OpCounter* counter = nullptr);
SetFunction fmt_q_to_mass(const SetFunction& q, OpCounter* counter = nullptr);
// Pl(empty) = 0.
SetFunction q_to_pl(const SetFunction& q, OpCounter* counter = nullptr);

SetFunction fast_transform(TransformKind kind, const SetFunction& f, OpCounter* counter = nullptr);

// Direct evaluation of each defining sum; summing k terms costs k - 1
// additions. Oracle and slow benchmark arm.
SetFunction naive_transform(TransformKind kind, const SetFunction& f, OpCounter* counter = nullptr);

enum class Relation { subset, superset };

// Graph of X <= Y (subset) or X >= Y (superset) on the powerset of an
// n-element frame, optionally without arrows leaving the empty set.
Graph inclusion_graph(std::size_t n, Relation relation, bool exclude_empty);

// Stage i links X to X and to X + a_i (subset) or X - a_i (superset), with
// a_i taken from `element_order` (identity when absent). The composite is
// inclusion_graph(n, relation, exclude_empty).
MAlgorithm hasse_sequence(std::size_t n, Relation relation, bool exclude_empty,
                          std::optional<std::span<const std::size_t>> element_order = std::nullopt);
MAlgorithm hasse_sequence(const Frame& frame, Relation relation, bool exclude_empty);

// Weighted stages mu_i: weight 1 on loops and -1 on X -> X + a_i (subset) or
// X -> X - a_i (superset). Computes the inverse of the full transform.
WeightedMAlgorithm hasse_inverse_sequence(std::size_t n, Relation relation);

FiniteSet powerset(std::size_t n);

}  // namespace mobius
