#pragma once

#include <random>

#include "mobius/set_function.hpp"

namespace mobius {

// Random bba with m(empty) = 0. Each nonempty subset carries mass with
// probability `density` (the whole frame always does); weights are uniform
// before normalization.
SetFunction random_bba(const Frame& frame, std::mt19937_64& rng, double density = 1.0);

// Values uniform in [lo, hi), tagged raw.
SetFunction random_function(const Frame& frame, std::mt19937_64& rng, double lo = -1.0, double hi = 1.0);

}  // namespace mobius
