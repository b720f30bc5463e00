#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mobius {

// Subset of a frame coded as a bitmask: element i of the frame is bit i.
using SubsetMask = std::uint32_t;

inline constexpr std::size_t kMaxFrameSize = 30;

inline constexpr bool is_subset(SubsetMask x, SubsetMask y) noexcept {
  return (x & y) == x;
}

// Ordered finite set of distinct labels. The order fixes the subset coding.
class Frame {
 public:
  // Throws Error(invalid_frame) on empty, duplicate, or comma-bearing labels
  // and Error(capacity_exceeded) above kMaxFrameSize elements.
  explicit Frame(std::vector<std::string> elements);

  // Frame {e0, e1, ..., e(n-1)}.
  static Frame numbered(std::size_t n);

  std::size_t size() const noexcept { return elements_.size(); }
  std::size_t subset_count() const noexcept { return std::size_t{1} << elements_.size(); }
  SubsetMask full_mask() const noexcept {
    return static_cast<SubsetMask>(subset_count() - 1);
  }

  const std::vector<std::string>& elements() const noexcept { return elements_; }
  const std::string& label(std::size_t i) const { return elements_.at(i); }

  // Position of a label, or size() when absent.
  std::size_t index_of(std::string_view label) const noexcept;

  bool operator==(const Frame& other) const = default;

 private:
  std::vector<std::string> elements_;
};

// Throws Error(element_not_in_frame) or Error(duplicate_member).
SubsetMask encode_subset(const Frame& frame, std::span<const std::string> members);

std::vector<std::string> decode_subset(const Frame& frame, SubsetMask mask);

// Comma-joined member labels in frame order; the empty set is "".
std::string subset_key(const Frame& frame, SubsetMask mask);

// Inverse of subset_key. Surrounding whitespace on each label is ignored.
SubsetMask parse_subset_key(const Frame& frame, std::string_view key);

}  // namespace mobius
