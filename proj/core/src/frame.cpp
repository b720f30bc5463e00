#include "mobius/frame.hpp"

#include <algorithm>
#include <unordered_set>

#include "mobius/error.hpp"

namespace mobius {

Frame::Frame(std::vector<std::string> elements) : elements_(std::move(elements)) {
  if (elements_.empty()) {
    throw Error(ErrorCode::invalid_frame, "frame must contain at least one element");
  }
  if (elements_.size() > kMaxFrameSize) {
    throw Error(ErrorCode::capacity_exceeded,
                "frame has " + std::to_string(elements_.size()) +
                    " elements; at most " + std::to_string(kMaxFrameSize) + " are supported");
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& label : elements_) {
    if (label.empty()) {
      throw Error(ErrorCode::invalid_frame, "frame labels must be non-empty");
    }
    if (label.find(',') != std::string::npos) {
      throw Error(ErrorCode::invalid_frame, "frame label '" + label + "' contains a comma");
    }
    if (!seen.insert(label).second) {
      throw Error(ErrorCode::invalid_frame, "duplicate frame label '" + label + "'");
    }
  }
}

Frame Frame::numbered(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
  return Frame(std::move(labels));
}

std::size_t Frame::index_of(std::string_view label) const noexcept {
  auto it = std::find(elements_.begin(), elements_.end(), label);
  return static_cast<std::size_t>(it - elements_.begin());
}

SubsetMask encode_subset(const Frame& frame, std::span<const std::string> members) {
  SubsetMask mask = 0;
  for (const auto& label : members) {
    const std::size_t i = frame.index_of(label);
    if (i == frame.size()) {
      throw Error(ErrorCode::element_not_in_frame, "'" + label + "' is not an element of the frame");
    }
    const SubsetMask bit = SubsetMask{1} << i;
    if (mask & bit) {
      throw Error(ErrorCode::duplicate_member, "'" + label + "' listed more than once");
    }
    mask |= bit;
  }
  return mask;
}

std::vector<std::string> decode_subset(const Frame& frame, SubsetMask mask) {
  std::vector<std::string> members;
  for (std::size_t i = 0; i < frame.size(); ++i) {
    if (mask & (SubsetMask{1} << i)) members.push_back(frame.label(i));
  }
  return members;
}

std::string subset_key(const Frame& frame, SubsetMask mask) {
  std::string key;
  for (std::size_t i = 0; i < frame.size(); ++i) {
    if (mask & (SubsetMask{1} << i)) {
      if (!key.empty()) key += ',';
      key += frame.label(i);
    }
  }
  return key;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

}  // namespace

SubsetMask parse_subset_key(const Frame& frame, std::string_view key) {
  std::vector<std::string> members;
  if (!trim(key).empty()) {
    std::size_t start = 0;
    while (true) {
      const auto comma = key.find(',', start);
      const auto piece = trim(key.substr(start, comma == std::string_view::npos ? key.npos : comma - start));
      members.emplace_back(piece);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  }
  return encode_subset(frame, members);
}

}  // namespace mobius
