#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "mobius/graph.hpp"

namespace mobius {

enum class MobiusMethod {
  recursive,  // mu(s,s) = 1, mu(s,t) = -sum of mu(s,x) over s <= x < t
  chains,     // mu(s,t) = sum over i of (-1)^i * #chains of length i from s to t
};

std::string_view method_name(MobiusMethod method) noexcept;

// Throws Error(not_a_partial_order) naming the first violated axiom
// (square, reflexive, antisymmetric, transitive) and a witness.
void validate_partial_order(const Graph& poset);

// Dense k x k integer matrix, row-major.
struct IncidenceMatrix {
  std::size_t size = 0;
  std::vector<std::int64_t> values;

  std::int64_t operator()(std::size_t s, std::size_t t) const { return values[s * size + t]; }
  std::int64_t& operator()(std::size_t s, std::size_t t) { return values[s * size + t]; }
  bool operator==(const IncidenceMatrix&) const = default;
};

IncidenceMatrix zeta_matrix(const Graph& poset);
IncidenceMatrix multiply(const IncidenceMatrix& a, const IncidenceMatrix& b);
IncidenceMatrix kronecker(std::size_t size);

// Mobius function of a partial order in exact integer arithmetic.
IncidenceMatrix mobius_values(const Graph& poset, MobiusMethod method);

// The same values as a weighted graph; zeta(poset) * mu = delta = mu * zeta(poset).
WeightedGraph mobius_function(const Graph& poset, MobiusMethod method);

// Covering relation of a partial order: (a, b) with a < b and nothing
// strictly between. With `reflexive`, every loop (a, a) is added.
Graph hasse_graph(const Graph& poset, bool reflexive);

}  // namespace mobius
