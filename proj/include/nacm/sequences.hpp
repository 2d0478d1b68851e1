#pragma once

#include <cstddef>
#include <vector>

#include "nacm/bdl.hpp"
#include "nacm/common.hpp"
#include "nacm/hvector.hpp"

namespace nacm {

/// Normal form of a height-one link sequence starting from data with initial
/// degree a: b links of type (a, 1) followed by links of strictly increasing
/// degrees gs, all above a. shift = b + |gs| is the total height.
struct CanonicalSequence {
  Int initial_degree = 0;
  Int b = 0;
  std::vector<Int> gs;
  Int shift = 0;

  BdlSequence to_sequence() const;

  friend bool operator==(const CanonicalSequence&, const CanonicalSequence&) = default;
};

/// Replaces each (d, a) by a copies of (d, 1); the resulting sequence acts
/// identically on h-vectors.
BdlSequence expand_sequence(const BdlSequence& sequence);

/// Rewrites adjacent height-one steps (x,1),(y,1) at positions i, i+1 into
/// (y-1,1),(x+1,1). Requires y != a0: links of the minimal degree cannot move.
BdlSequence swap_adjacent(const BdlSequence& sequence, std::size_t i, Int a0);

struct NormalizationResult {
  CanonicalSequence canonical;
  /// Degree rows: the expanded input first, one row per applied swap, the
  /// canonical arrangement last.
  std::vector<std::vector<Int>> swap_rows;
};

/// Expands, then bubbles the leftmost adjacent inversion of d_i - i via
/// swap_adjacent (skipping swaps that are inadmissible from `start`) until
/// the arrangement is canonical. The result is checked against the direct
/// normal form computed from the invariant multiset {d_i - i}; the final
/// h-vector is checked unchanged. Requires a = initial_degree(start).
NormalizationResult normalize(const BdlSequence& sequence, const HVector& start, Int a);

/// Same final h-vector and the same total height from `start`.
bool sequences_equivalent(const BdlSequence& lhs, const BdlSequence& rhs, const HVector& start);

}  // namespace nacm
