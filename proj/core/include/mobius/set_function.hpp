#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mobius/frame.hpp"

namespace mobius {

enum class ValueKind { mass, belief, commonality, plausibility, raw };

std::string_view kind_name(ValueKind kind) noexcept;
std::optional<ValueKind> parse_kind(std::string_view name) noexcept;

// Dense real function on the powerset of a frame, indexed by subset mask.
class SetFunction {
 public:
  // All-zero function.
  SetFunction(Frame frame, ValueKind kind);
  // Throws Error(dimension_mismatch) unless values.size() == 2^n.
  SetFunction(Frame frame, ValueKind kind, std::vector<double> values);

  const Frame& frame() const noexcept { return frame_; }
  ValueKind kind() const noexcept { return kind_; }
  std::size_t size() const noexcept { return values_.size(); }

  std::span<const double> values() const noexcept { return values_; }
  std::span<double> values() noexcept { return values_; }

  double operator[](SubsetMask mask) const { return values_[mask]; }
  double& operator[](SubsetMask mask) { return values_[mask]; }

  double at(std::span<const std::string> members) const {
    return values_[encode_subset(frame_, members)];
  }

  // Copy with a different semantic tag.
  SetFunction relabeled(ValueKind kind) const;

 private:
  Frame frame_;
  ValueKind kind_;
  std::vector<double> values_;
};

inline constexpr double kMassSumTolerance = 1e-9;

struct BbaViolation {
  enum class Type { negative_mass, bad_sum, nonzero_empty, not_a_mass };
  Type type;
  std::optional<SubsetMask> subset;
  double value = 0.0;
  std::string message;
};

struct BbaReport {
  std::vector<BbaViolation> violations;
  bool valid() const noexcept { return violations.empty(); }
};

// Checks nonnegativity, unit sum within kMassSumTolerance and, when
// exclude_empty is set, m(empty) == 0.
BbaReport validate_bba(const SetFunction& f, bool exclude_empty);

}  // namespace mobius
