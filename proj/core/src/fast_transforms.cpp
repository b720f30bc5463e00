#include "mobius/fast_transforms.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "mobius/error.hpp"

namespace mobius {

std::string_view transform_name(TransformKind kind) noexcept {
  switch (kind) {
    case TransformKind::mass_to_bel: return "mass_to_bel";
    case TransformKind::mass_to_bel_full: return "mass_to_bel_full";
    case TransformKind::bel_to_mass: return "bel_to_mass";
    case TransformKind::mass_to_q: return "mass_to_q";
    case TransformKind::q_to_mass: return "q_to_mass";
    case TransformKind::q_to_pl: return "q_to_pl";
  }
  return "unknown";
}

ValueKind input_kind(TransformKind kind) noexcept {
  switch (kind) {
    case TransformKind::mass_to_bel:
    case TransformKind::mass_to_bel_full:
    case TransformKind::mass_to_q: return ValueKind::mass;
    case TransformKind::bel_to_mass: return ValueKind::belief;
    case TransformKind::q_to_mass:
    case TransformKind::q_to_pl: return ValueKind::commonality;
  }
  return ValueKind::raw;
}

ValueKind output_kind(TransformKind kind) noexcept {
  switch (kind) {
    case TransformKind::mass_to_bel:
    case TransformKind::mass_to_bel_full: return ValueKind::belief;
    case TransformKind::bel_to_mass:
    case TransformKind::q_to_mass: return ValueKind::mass;
    case TransformKind::mass_to_q: return ValueKind::commonality;
    case TransformKind::q_to_pl: return ValueKind::plausibility;
  }
  return ValueKind::raw;
}

namespace kernel {
namespace {

std::size_t pass_count(std::span<const double> v) {
  if (v.empty() || !std::has_single_bit(v.size())) {
    throw Error(ErrorCode::dimension_mismatch,
                "transform buffer length " + std::to_string(v.size()) + " is not a power of two");
  }
  return static_cast<std::size_t>(std::countr_zero(v.size()));
}

// For each pass, calls update(lower, upper) on every pair of cells that
// differ only in the pass bit; lower lacks the bit.
template <class Update>
void run_passes(std::span<double> v, bool skip_empty_lower, OpCounter* counter, Update update) {
  const std::size_t n = pass_count(v);
  const std::size_t size = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t bit = std::size_t{1} << i;
    std::uint64_t additions = 0;
    for (std::size_t base = 0; base < size; base += 2 * bit) {
      const std::size_t first = (skip_empty_lower && base == 0) ? 1 : 0;
      double* lower = v.data() + base;
      double* upper = lower + bit;
      for (std::size_t j = first; j < bit; ++j) update(lower[j], upper[j]);
      additions += bit - first;
    }
    if (counter) {
      counter->begin_stage();
      counter->add_in_stage(additions);
    }
  }
}

}  // namespace

void subset_sum(std::span<double> v, OpCounter* counter) {
  run_passes(v, false, counter, [](double& lo, double& hi) { hi += lo; });
}

void subset_sum_nonempty(std::span<double> v, OpCounter* counter) {
  run_passes(v, true, counter, [](double& lo, double& hi) { hi += lo; });
  v[0] = 0.0;
}

void subset_difference(std::span<double> v, OpCounter* counter) {
  run_passes(v, false, counter, [](double& lo, double& hi) { hi -= lo; });
}

void subset_difference_nonempty(std::span<double> v, OpCounter* counter) {
  run_passes(v, true, counter, [](double& lo, double& hi) { hi -= lo; });
  v[0] = 0.0;
}

void superset_sum(std::span<double> v, OpCounter* counter) {
  run_passes(v, false, counter, [](double& lo, double& hi) { lo += hi; });
}

void superset_difference(std::span<double> v, OpCounter* counter) {
  run_passes(v, false, counter, [](double& lo, double& hi) { lo -= hi; });
}

}  // namespace kernel

namespace {

ValueKind checked_output(TransformKind kind, const SetFunction& f) {
  if (f.kind() == ValueKind::raw) return ValueKind::raw;
  if (f.kind() != input_kind(kind)) {
    throw Error(ErrorCode::unsupported_conversion,
                std::string(transform_name(kind)) + " expects a '" +
                    std::string(kind_name(input_kind(kind))) + "' function, got '" +
                    std::string(kind_name(f.kind())) + "'");
  }
  return output_kind(kind);
}

template <class Kernel>
SetFunction run_fast(TransformKind kind, const SetFunction& f, OpCounter* counter, Kernel kernel) {
  const ValueKind out_kind = checked_output(kind, f);
  SetFunction out = f.relabeled(out_kind);
  kernel(out.values(), counter);
  return out;
}

int parity_sign(SubsetMask x) { return (std::popcount(x) % 2 == 0) ? 1 : -1; }

// Accumulates terms into a cell: the first is assigned, later ones added.
struct Accumulator {
  double value = 0.0;
  std::uint64_t terms = 0;
  void push(double term) {
    value = (terms++ == 0) ? term : value + term;
  }
  std::uint64_t additions() const { return terms == 0 ? 0 : terms - 1; }
};

}  // namespace

SetFunction fmt_mass_to_bel(const SetFunction& m, bool include_empty, OpCounter* counter) {
  const auto kind = include_empty ? TransformKind::mass_to_bel_full : TransformKind::mass_to_bel;
  return fast_transform(kind, m, counter);
}

SetFunction fmt_bel_to_mass(const SetFunction& bel, OpCounter* counter) {
  return fast_transform(TransformKind::bel_to_mass, bel, counter);
}

SetFunction fmt_mass_to_q(const SetFunction& m, OpCounter* counter) {
  return fast_transform(TransformKind::mass_to_q, m, counter);
}

SetFunction fmt_q_to_mass(const SetFunction& q, OpCounter* counter) {
  return fast_transform(TransformKind::q_to_mass, q, counter);
}

SetFunction q_to_pl(const SetFunction& q, OpCounter* counter) {
  return fast_transform(TransformKind::q_to_pl, q, counter);
}

SetFunction fast_transform(TransformKind kind, const SetFunction& f, OpCounter* counter) {
  switch (kind) {
    case TransformKind::mass_to_bel:
      return run_fast(kind, f, counter, [](auto v, auto* c) { kernel::subset_sum_nonempty(v, c); });
    case TransformKind::mass_to_bel_full:
      return run_fast(kind, f, counter, [](auto v, auto* c) { kernel::subset_sum(v, c); });
    case TransformKind::bel_to_mass:
      return run_fast(kind, f, counter, [](auto v, auto* c) { kernel::subset_difference(v, c); });
    case TransformKind::mass_to_q:
      return run_fast(kind, f, counter, [](auto v, auto* c) { kernel::superset_sum(v, c); });
    case TransformKind::q_to_mass:
      return run_fast(kind, f, counter, [](auto v, auto* c) { kernel::superset_difference(v, c); });
    case TransformKind::q_to_pl:
      return run_fast(kind, f, counter, [](auto v, auto* c) {
        kernel::subset_difference_nonempty(v, c);
        for (double& x : v) x = std::abs(x);
      });
  }
  throw Error(ErrorCode::unsupported_conversion, "unknown transform");
}

SetFunction naive_transform(TransformKind kind, const SetFunction& f, OpCounter* counter) {
  const ValueKind out_kind = checked_output(kind, f);
  SetFunction out(f.frame(), out_kind);
  const auto in = f.values();
  const SubsetMask full = f.frame().full_mask();
  const std::size_t count = f.size();
  std::uint64_t additions = 0;

  for (std::size_t a = 0; a < count; ++a) {
    const auto subset = static_cast<SubsetMask>(a);
    Accumulator acc;
    switch (kind) {
      case TransformKind::mass_to_bel:
      case TransformKind::mass_to_bel_full:
      case TransformKind::bel_to_mass:
      case TransformKind::q_to_pl: {
        const bool skip_empty = kind == TransformKind::mass_to_bel || kind == TransformKind::q_to_pl;
        for (SubsetMask x = subset;; x = (x - 1) & subset) {
          if (!(skip_empty && x == 0)) {
            if (kind == TransformKind::bel_to_mass) {
              acc.push(parity_sign(subset & ~x) * in[x]);
            } else if (kind == TransformKind::q_to_pl) {
              acc.push(-parity_sign(x) * in[x]);
            } else {
              acc.push(in[x]);
            }
          }
          if (x == 0) break;
        }
        break;
      }
      case TransformKind::mass_to_q:
      case TransformKind::q_to_mass: {
        for (SubsetMask x = subset;; x = (x + 1) | subset) {
          acc.push(kind == TransformKind::q_to_mass ? parity_sign(x & ~subset) * in[x] : in[x]);
          if (x == full) break;
        }
        break;
      }
    }
    out[subset] = acc.value;
    additions += acc.additions();
  }
  if (counter) {
    counter->begin_stage();
    counter->add_in_stage(additions);
  }
  return out;
}

FiniteSet powerset(std::size_t n) {
  if (n > kMaxFrameSize) {
    throw Error(ErrorCode::capacity_exceeded, "powerset of " + std::to_string(n) + " elements is too large");
  }
  return FiniteSet(std::size_t{1} << n, "P(" + std::to_string(n) + ")");
}

Graph inclusion_graph(std::size_t n, Relation relation, bool exclude_empty) {
  const FiniteSet set = powerset(n);
  const SubsetMask full = static_cast<SubsetMask>(set.size - 1);
  std::vector<Arrow> arrows;
  std::size_t reserve = 1;
  for (std::size_t i = 0; i < n; ++i) reserve *= 3;
  arrows.reserve(reserve);
  for (SubsetMask x = 0;; ++x) {
    if (!(exclude_empty && x == 0)) {
      if (relation == Relation::subset) {
        for (SubsetMask y = x;; y = (y + 1) | x) {
          arrows.push_back({x, y});
          if (y == full) break;
        }
      } else {
        // Submasks in increasing order: complement the descending enumeration.
        const std::size_t first = arrows.size();
        for (SubsetMask y = x;; y = (y - 1) & x) {
          arrows.push_back({x, y});
          if (y == 0) break;
        }
        std::reverse(arrows.begin() + static_cast<std::ptrdiff_t>(first), arrows.end());
      }
    }
    if (x == full) break;
  }
  return Graph(set, set, std::move(arrows));
}

MAlgorithm hasse_sequence(std::size_t n, Relation relation, bool exclude_empty,
                          std::optional<std::span<const std::size_t>> element_order) {
  const FiniteSet set = powerset(n);
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  if (element_order) {
    if (element_order->size() != n) {
      throw Error(ErrorCode::dimension_mismatch, "element order must list all " + std::to_string(n) + " elements");
    }
    std::vector<bool> seen(n, false);
    for (std::size_t e : *element_order) {
      if (e >= n || seen[e]) throw Error(ErrorCode::index_out_of_range, "element order is not a permutation");
      seen[e] = true;
    }
    order.assign(element_order->begin(), element_order->end());
  }

  std::vector<Graph> stages;
  stages.reserve(n);
  for (std::size_t element : order) {
    const SubsetMask bit = SubsetMask{1} << element;
    std::vector<Arrow> arrows;
    arrows.reserve(set.size + set.size / 2);
    for (SubsetMask x = 0; x < set.size; ++x) {
      if (exclude_empty && x == 0) continue;
      arrows.push_back({x, x});
      const SubsetMask y = relation == Relation::subset ? (x | bit) : (x & ~bit);
      if (y != x) arrows.push_back({x, y});
    }
    stages.emplace_back(set, set, std::move(arrows));
  }
  return MAlgorithm(std::move(stages));
}

MAlgorithm hasse_sequence(const Frame& frame, Relation relation, bool exclude_empty) {
  return hasse_sequence(frame.size(), relation, exclude_empty);
}

WeightedMAlgorithm hasse_inverse_sequence(std::size_t n, Relation relation) {
  const FiniteSet set = powerset(n);
  std::vector<WeightedGraph> stages;
  stages.reserve(n);
  for (std::size_t element = 0; element < n; ++element) {
    const SubsetMask bit = SubsetMask{1} << element;
    std::vector<WeightedArrow> entries;
    for (SubsetMask x = 0; x < set.size; ++x) {
      entries.push_back({x, x, 1.0});
      const SubsetMask y = relation == Relation::subset ? (x | bit) : (x & ~bit);
      if (y != x) entries.push_back({x, y, -1.0});
    }
    stages.emplace_back(set, set, std::move(entries));
  }
  return WeightedMAlgorithm(std::move(stages));
}

}  // namespace mobius
