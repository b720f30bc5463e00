#include "mobius/set_function.hpp"

#include <cmath>
#include <sstream>

#include "mobius/error.hpp"

namespace mobius {

std::string_view kind_name(ValueKind kind) noexcept {
  switch (kind) {
    case ValueKind::mass: return "mass";
    case ValueKind::belief: return "belief";
    case ValueKind::commonality: return "commonality";
    case ValueKind::plausibility: return "plausibility";
    case ValueKind::raw: return "raw";
  }
  return "raw";
}

std::optional<ValueKind> parse_kind(std::string_view name) noexcept {
  if (name == "mass" || name == "m") return ValueKind::mass;
  if (name == "belief" || name == "bel") return ValueKind::belief;
  if (name == "commonality" || name == "q") return ValueKind::commonality;
  if (name == "plausibility" || name == "pl") return ValueKind::plausibility;
  if (name == "raw") return ValueKind::raw;
  return std::nullopt;
}

SetFunction::SetFunction(Frame frame, ValueKind kind)
    : frame_(std::move(frame)), kind_(kind), values_(frame_.subset_count(), 0.0) {}

SetFunction::SetFunction(Frame frame, ValueKind kind, std::vector<double> values)
    : frame_(std::move(frame)), kind_(kind), values_(std::move(values)) {
  if (values_.size() != frame_.subset_count()) {
    throw Error(ErrorCode::dimension_mismatch,
                "set function needs " + std::to_string(frame_.subset_count()) +
                    " values for a frame of " + std::to_string(frame_.size()) +
                    " elements, got " + std::to_string(values_.size()));
  }
}

SetFunction SetFunction::relabeled(ValueKind kind) const {
  SetFunction copy = *this;
  copy.kind_ = kind;
  return copy;
}

BbaReport validate_bba(const SetFunction& f, bool exclude_empty) {
  BbaReport report;
  const auto add = [&](BbaViolation::Type type, std::optional<SubsetMask> subset, double value,
                       std::string message) {
    report.violations.push_back({type, subset, value, std::move(message)});
  };

  if (f.kind() != ValueKind::mass) {
    add(BbaViolation::Type::not_a_mass, std::nullopt, 0.0,
        "function is tagged '" + std::string(kind_name(f.kind())) + "', not 'mass'");
  }

  double sum = 0.0;
  const auto values = f.values();
  for (std::size_t x = 0; x < values.size(); ++x) {
    sum += values[x];
    if (values[x] < 0.0 || std::isnan(values[x])) {
      std::ostringstream msg;
      msg << "m({" << subset_key(f.frame(), static_cast<SubsetMask>(x)) << "}) = " << values[x]
          << " is negative";
      add(BbaViolation::Type::negative_mass, static_cast<SubsetMask>(x), values[x], msg.str());
    }
  }
  if (!(std::abs(sum - 1.0) <= kMassSumTolerance)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "masses sum to " << sum << ", not 1";
    add(BbaViolation::Type::bad_sum, std::nullopt, sum, msg.str());
  }
  if (exclude_empty && values[0] != 0.0) {
    std::ostringstream msg;
    msg << "m(\xE2\x88\x85)\xE2\x89\xA0" "0: m(\xE2\x88\x85) = " << values[0];
    add(BbaViolation::Type::nonzero_empty, SubsetMask{0}, values[0], msg.str());
  }
  return report;
}

}  // namespace mobius
