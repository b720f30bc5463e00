#pragma once

#include "mobius/op_counter.hpp"
#include "mobius/set_function.hpp"

namespace mobius {

// Unnormalized combination: mass landing on the empty set is kept and
// reported as conflict.
struct CombinationResult {
  SetFunction combined;
  double conflict = 0.0;
  bool normalized = false;
};

struct CombineOptions {
  // Reject inputs that are not valid bbas (Error(invalid_bba)).
  bool strict = false;
};

// m1 (+) m2 (A) = sum of m1(X) * m2(Y) over X, Y with X & Y = A. Every pair
// costs one multiplication; accumulation costs 2^n (2^n - 1) additions.
CombinationResult dempster_naive(const SetFunction& m1, const SetFunction& m2,
                                 OpCounter* counter = nullptr, CombineOptions options = {});

// Through commonalities: Q of the combination is the pointwise product of the
// input Qs. Two superset sums, 2^n multiplications, one superset difference.
CombinationResult dempster_fast(const SetFunction& m1, const SetFunction& m2,
                                OpCounter* counter = nullptr, CombineOptions options = {});

enum class Algorithm { naive, fast };

// Pl of m1 (+) m2.
//   fast: mass -> Q for both inputs, pointwise product, Q -> Pl.
//   naive: dempster_naive, then plausibility_naive.
SetFunction combine_to_plausibility(const SetFunction& m1, const SetFunction& m2, Algorithm algorithm,
                                    OpCounter* counter = nullptr, CombineOptions options = {});

// Pl(A) = bel(frame) - bel(complement of A) for A nonempty, Pl(empty) = 0,
// with bel evaluated by the direct subset sums over nonempty X. Costs
// 3^n - 2^n additions.
SetFunction plausibility_naive(const SetFunction& m, OpCounter* counter = nullptr);

// Zeroes the empty-set cell and rescales by 1 / (1 - conflict). The reported
// conflict keeps its pre-normalization value. Throws
// Error(total_conflict) when the conflict is 1 within 1e-12.
CombinationResult normalize(const CombinationResult& result);

// Mass function with all mass on the whole frame.
SetFunction vacuous_mass(const Frame& frame);

}  // namespace mobius
