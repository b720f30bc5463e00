#include "mobius/random.hpp"

namespace mobius {

SetFunction random_bba(const Frame& frame, std::mt19937_64& rng, double density) {
  SetFunction m(frame, ValueKind::mass);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const SubsetMask full = frame.full_mask();
  double total = 0.0;
  for (SubsetMask x = 1;; ++x) {
    if (x == full || unit(rng) < density) {
      m[x] = unit(rng) + 1e-3;
      total += m[x];
    }
    if (x == full) break;
  }
  for (double& v : m.values()) v /= total;
  return m;
}

SetFunction random_function(const Frame& frame, std::mt19937_64& rng, double lo, double hi) {
  SetFunction f(frame, ValueKind::raw);
  std::uniform_real_distribution<double> dist(lo, hi);
  for (double& v : f.values()) v = dist(rng);
  return f;
}

}  // namespace mobius
