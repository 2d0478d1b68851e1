#pragma once

#include <utility>
#include <vector>

#include "nacm/betti.hpp"
#include "nacm/common.hpp"
#include "nacm/hvector.hpp"

namespace nacm {

/// Basic double link of type (d, a): J = G * I + (F) with deg G = a and
/// F in I of degree d. Only the two degrees matter numerically.
struct BdlStep {
  Int d = 0;
  Int a = 0;

  friend bool operator==(const BdlStep&, const BdlStep&) = default;
};

struct BdlSequence {
  std::vector<BdlStep> steps;

  Int total_height() const;

  friend bool operator==(const BdlSequence&, const BdlSequence&) = default;
};

/// r' = {r_i + a} + {d},  s' = {s_j + a} + {d + a}.
/// Requires d >= min(r): a form of degree d must exist in the ideal.
ResolutionProfile apply_bdl_profile(const ResolutionProfile& profile, BdlStep step);

/// h'(t) = h(t - a) + ci_hvector(d, a)(t). Requires d >= initial_degree(h).
HVector apply_bdl_hvector(const HVector& h, BdlStep step);

/// Shifts every position >= 1 by a in degree, adds twist d at position 1 and
/// twist d + a at position 2. When F is taken among the minimal generators
/// the (d+a, d+a) pair between positions 1 and 2 splits off and is cancelled.
BettiTable apply_bdl_table(const BettiTable& table, BdlStep step, bool f_is_minimal_generator);

/// Default for the minimal-generator flag: true exactly when the table has a
/// generator of degree d to spend.
bool default_minimal_generator_flag(const BettiTable& table, BdlStep step);

/// Left fold of apply_bdl_hvector; returns the final h-vector and the total
/// shift (sum of heights a). Step failures carry the 1-based step index.
std::pair<HVector, Int> apply_sequence(const HVector& h, const BdlSequence& sequence);

/// Applies a whole sequence to a table, choosing the minimal-generator flag
/// per step via default_minimal_generator_flag.
BettiTable apply_sequence_table(const BettiTable& table, const BdlSequence& sequence);

/// deg(J) = a * d + deg(X).
Int bdl_degree(Int degree, BdlStep step);

}  // namespace nacm
