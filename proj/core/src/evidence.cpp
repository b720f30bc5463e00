#include "mobius/evidence.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "mobius/error.hpp"
#include "mobius/fast_transforms.hpp"

namespace mobius {

namespace {

void check_inputs(const SetFunction& m1, const SetFunction& m2, const CombineOptions& options) {
  if (!(m1.frame() == m2.frame())) {
    throw Error(ErrorCode::frame_mismatch, "cannot combine mass functions defined on different frames");
  }
  for (const SetFunction* m : {&m1, &m2}) {
    if (m->kind() != ValueKind::mass && m->kind() != ValueKind::raw) {
      throw Error(ErrorCode::invalid_bba, "combination expects mass functions, got '" +
                                              std::string(kind_name(m->kind())) + "'");
    }
    if (options.strict) {
      const auto report = validate_bba(*m, false);
      if (!report.valid()) throw Error(ErrorCode::invalid_bba, report.violations.front().message);
    }
  }
}

SetFunction as_mass(const SetFunction& f) {
  return f.kind() == ValueKind::mass ? f : f.relabeled(ValueKind::mass);
}

std::vector<double> commonality_product(const SetFunction& m1, const SetFunction& m2, OpCounter* counter) {
  SetFunction q1 = fmt_mass_to_q(as_mass(m1), counter);
  const SetFunction q2 = fmt_mass_to_q(as_mass(m2), counter);
  auto product = q1.values();
  const auto other = q2.values();
  for (std::size_t a = 0; a < product.size(); ++a) product[a] *= other[a];
  if (counter) counter->multiply(product.size());
  return {product.begin(), product.end()};
}

}  // namespace

CombinationResult dempster_naive(const SetFunction& m1, const SetFunction& m2, OpCounter* counter,
                                 CombineOptions options) {
  check_inputs(m1, m2, options);
  SetFunction combined(m1.frame(), ValueKind::mass);
  const auto a = m1.values();
  const auto b = m2.values();
  auto out = combined.values();
  std::vector<bool> touched(out.size(), false);
  std::uint64_t additions = 0;
  std::uint64_t multiplications = 0;
  for (std::size_t x = 0; x < a.size(); ++x) {
    for (std::size_t y = 0; y < b.size(); ++y) {
      const double term = a[x] * b[y];
      ++multiplications;
      const std::size_t cell = x & y;
      if (touched[cell]) {
        out[cell] += term;
        ++additions;
      } else {
        out[cell] = term;
        touched[cell] = true;
      }
    }
  }
  if (counter) {
    counter->begin_stage();
    counter->add_in_stage(additions);
    counter->multiply(multiplications);
  }
  const double conflict = combined[0];
  return {std::move(combined), conflict, false};
}

CombinationResult dempster_fast(const SetFunction& m1, const SetFunction& m2, OpCounter* counter,
                                CombineOptions options) {
  check_inputs(m1, m2, options);
  SetFunction q(m1.frame(), ValueKind::commonality, commonality_product(m1, m2, counter));
  SetFunction combined = fmt_q_to_mass(q, counter);
  const double conflict = combined[0];
  return {std::move(combined), conflict, false};
}

SetFunction combine_to_plausibility(const SetFunction& m1, const SetFunction& m2, Algorithm algorithm,
                                    OpCounter* counter, CombineOptions options) {
  if (algorithm == Algorithm::naive) {
    const auto result = dempster_naive(m1, m2, counter, options);
    return plausibility_naive(result.combined, counter);
  }
  check_inputs(m1, m2, options);
  const SetFunction q(m1.frame(), ValueKind::commonality, commonality_product(m1, m2, counter));
  return q_to_pl(q, counter);
}

SetFunction plausibility_naive(const SetFunction& m, OpCounter* counter) {
  const SetFunction bel = naive_transform(TransformKind::mass_to_bel, as_mass(m), counter);
  SetFunction pl(m.frame(), ValueKind::plausibility);
  const SubsetMask full = m.frame().full_mask();
  for (SubsetMask a = 1;; ++a) {
    pl[a] = bel[full] - bel[full & ~a];
    if (a == full) break;
  }
  if (counter) {
    counter->begin_stage();
    counter->add_in_stage(m.size() - 1);
  }
  return pl;
}

CombinationResult normalize(const CombinationResult& result) {
  const double conflict = result.combined[0];
  if (std::abs(1.0 - conflict) <= 1e-12) {
    throw Error(ErrorCode::total_conflict, "total conflict: all combined mass lies on the empty set");
  }
  CombinationResult out = result;
  const double scale = 1.0 / (1.0 - conflict);
  auto values = out.combined.values();
  values[0] = 0.0;
  for (std::size_t a = 1; a < values.size(); ++a) values[a] *= scale;
  out.normalized = true;
  return out;
}

SetFunction vacuous_mass(const Frame& frame) {
  SetFunction m(frame, ValueKind::mass);
  m[frame.full_mask()] = 1.0;
  return m;
}

}  // namespace mobius
