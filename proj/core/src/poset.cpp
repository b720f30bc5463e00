#include "mobius/poset.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "mobius/error.hpp"

namespace mobius {

std::string_view method_name(MobiusMethod method) noexcept {
  return method == MobiusMethod::recursive ? "recursive" : "chains";
}

namespace {

[[noreturn]] void fail(const std::string& axiom, const std::string& detail) {
  throw Error(ErrorCode::not_a_partial_order, "not a partial order (" + axiom + "): " + detail);
}

std::string pair_text(Index s, Index t) {
  return "(" + std::to_string(s) + ", " + std::to_string(t) + ")";
}

// Strict predecessors first: x < t implies the down-set of x is strictly smaller.
std::vector<Index> linear_extension(const Graph& poset) {
  const std::size_t k = poset.source().size;
  std::vector<std::size_t> below(k, 0);
  for (const auto& a : poset.arrows()) ++below[a.target];
  std::vector<Index> order(k);
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Index x, Index y) { return below[x] < below[y]; });
  return order;
}

}  // namespace

void validate_partial_order(const Graph& poset) {
  if (!same_set(poset.source(), poset.target())) {
    fail("square", "source has size " + std::to_string(poset.source().size) + ", target has size " +
                       std::to_string(poset.target().size));
  }
  const Index k = static_cast<Index>(poset.source().size);
  for (Index s = 0; s < k; ++s) {
    if (!poset.contains(s, s)) fail("reflexive", "missing loop " + pair_text(s, s));
  }
  for (const auto& a : poset.arrows()) {
    if (a.source != a.target && poset.contains(a.target, a.source)) {
      fail("antisymmetric", "both " + pair_text(a.source, a.target) + " and " +
                                pair_text(a.target, a.source) + " present");
    }
  }
  for (const auto& a : poset.arrows()) {
    for (const auto& b : poset.out_arrows(a.target)) {
      if (!poset.contains(a.source, b.target)) {
        fail("transitive", pair_text(a.source, a.target) + " and " + pair_text(b.source, b.target) +
                               " present but " + pair_text(a.source, b.target) + " missing");
      }
    }
  }
}

IncidenceMatrix zeta_matrix(const Graph& poset) {
  IncidenceMatrix z{poset.source().size, std::vector<std::int64_t>(poset.source().size * poset.target().size, 0)};
  for (const auto& a : poset.arrows()) z(a.source, a.target) = 1;
  return z;
}

IncidenceMatrix kronecker(std::size_t size) {
  IncidenceMatrix d{size, std::vector<std::int64_t>(size * size, 0)};
  for (std::size_t i = 0; i < size; ++i) d(i, i) = 1;
  return d;
}

IncidenceMatrix multiply(const IncidenceMatrix& a, const IncidenceMatrix& b) {
  if (a.size != b.size) throw Error(ErrorCode::dimension_mismatch, "incidence matrix sizes differ");
  const std::size_t k = a.size;
  IncidenceMatrix c{k, std::vector<std::int64_t>(k * k, 0)};
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const std::int64_t x = a(i, j);
      if (x == 0) continue;
      for (std::size_t l = 0; l < k; ++l) c(i, l) += x * b(j, l);
    }
  }
  return c;
}

IncidenceMatrix mobius_values(const Graph& poset, MobiusMethod method) {
  validate_partial_order(poset);
  const std::size_t k = poset.source().size;

  if (method == MobiusMethod::recursive) {
    const auto order = linear_extension(poset);
    IncidenceMatrix mu{k, std::vector<std::int64_t>(k * k, 0)};
    for (Index s = 0; s < k; ++s) {
      mu(s, s) = 1;
      for (Index t : order) {
        if (t == s || !poset.contains(s, t)) continue;
        // Every x with s <= x < t precedes t in the extension, so mu(s, x) is final.
        std::int64_t sum = 0;
        for (const auto& a : poset.out_arrows(s)) {
          const Index x = a.target;
          if (x != t && poset.contains(x, t)) sum += mu(s, x);
        }
        mu(s, t) = -sum;
      }
    }
    return mu;
  }

  // lambda_i = (zeta - delta)^i counts chains of length i; the strict part is
  // nilpotent, so the alternating series ends after the longest chain.
  IncidenceMatrix strict = zeta_matrix(poset);
  for (std::size_t i = 0; i < k; ++i) strict(i, i) = 0;
  IncidenceMatrix lambda = kronecker(k);
  IncidenceMatrix mu = lambda;
  for (std::size_t length = 1; length <= k; ++length) {
    lambda = multiply(lambda, strict);
    if (std::all_of(lambda.values.begin(), lambda.values.end(), [](std::int64_t v) { return v == 0; })) break;
    const std::int64_t sign = (length % 2 == 0) ? 1 : -1;
    for (std::size_t i = 0; i < mu.values.size(); ++i) mu.values[i] += sign * lambda.values[i];
  }
  return mu;
}

WeightedGraph mobius_function(const Graph& poset, MobiusMethod method) {
  const auto mu = mobius_values(poset, method);
  std::vector<WeightedArrow> entries;
  for (Index s = 0; s < mu.size; ++s) {
    for (Index t = 0; t < mu.size; ++t) {
      if (mu(s, t) != 0) entries.push_back({s, t, static_cast<double>(mu(s, t))});
    }
  }
  return WeightedGraph(poset.source(), poset.target(), std::move(entries));
}

Graph hasse_graph(const Graph& poset, bool reflexive) {
  validate_partial_order(poset);
  const Index k = static_cast<Index>(poset.source().size);
  std::vector<Arrow> arrows;
  std::vector<std::size_t> blocked(k, 0);
  for (Index a = 0; a < k; ++a) {
    // b > a is blocked when some x with a < x < b exists.
    for (const auto& ax : poset.out_arrows(a)) {
      if (ax.target == a) continue;
      for (const auto& xb : poset.out_arrows(ax.target)) {
        if (xb.target != ax.target) blocked[xb.target] = a + 1;
      }
    }
    for (const auto& ab : poset.out_arrows(a)) {
      if (ab.target == a) {
        if (reflexive) arrows.push_back({a, a});
      } else if (blocked[ab.target] != a + 1) {
        arrows.push_back({a, ab.target});
      }
    }
  }
  return Graph(poset.source(), poset.target(), std::move(arrows));
}

}  // namespace mobius
