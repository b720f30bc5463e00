#pragma once

#include <cstdint>
#include <vector>

namespace mobius {

// Semantic operation counts: "a + b" is one addition whatever a and b are.
// Subtractions count as additions. Accumulating k terms into a cell costs
// k - 1 additions; the first term is a plain assignment.
struct OpCounter {
  std::uint64_t additions = 0;
  std::uint64_t multiplications = 0;
  // Additions per stage (pass) of staged algorithms, in execution order.
  std::vector<std::uint64_t> per_stage;

  void multiply(std::uint64_t k = 1) noexcept { multiplications += k; }

  void begin_stage() { per_stage.push_back(0); }
  // Opens a first stage when none is open, so additions == sum(per_stage).
  void add_in_stage(std::uint64_t k = 1) {
    additions += k;
    if (per_stage.empty()) per_stage.push_back(0);
    per_stage.back() += k;
  }

  void reset() {
    additions = 0;
    multiplications = 0;
    per_stage.clear();
  }
};

}  // namespace mobius
