#pragma once

#include <vector>

#include "nacm/betti.hpp"
#include "nacm/common.hpp"

namespace nacm {

/// Finitely supported integer sequence with h(0) = 1 and a nonzero last
/// entry (trailing zeros are trimmed on construction). Entries may be
/// negative away from the arithmetically Cohen-Macaulay case.
class HVector {
public:
  HVector() : values_{1} {}
  explicit HVector(std::vector<Int> values);

  const std::vector<Int>& values() const { return values_; }
  /// Value at degree k, zero outside the stored range.
  Int at(Int k) const;
  Int last_degree() const { return static_cast<Int>(values_.size()) - 1; }
  Int sum() const;
  /// sum of k * h(k); enters the genus bookkeeping of curve data.
  Int weighted_sum() const;

  friend bool operator==(const HVector&, const HVector&) = default;

private:
  std::vector<Int> values_;
};

/// h(k) = k+1 - sum_{r_i <= k} (k - r_i + 1) + sum_{s_j <= k} (k - s_j + 1).
/// Rejects invalid profiles; a non-vanishing tail past max(s,r) is a defect.
HVector hvector_from_profile(const ResolutionProfile& profile);

/// Same-length first difference a(k) - a(k-1), with a(-1) taken as zero.
std::vector<Int> difference(const std::vector<Int>& values);

/// Hilbert function of some Artinian quotient of a polynomial ring in two
/// variables: nonnegative, h(i) <= i+1, and weakly decreasing from the first
/// degree where h(i) <= i. Rejects h(1) > 2.
bool is_o_sequence_codim2(const HVector& h);

/// Independent oracle: Macaulay's binomial-expansion growth bound,
/// h(i+1) <= h(i)^<i> for all i >= 1. Total on plain lists; no exceptions.
bool is_o_sequence_macaulay(const std::vector<Int>& values);

/// Max allowed value in degree i+1 after value `a` in degree i (i >= 1).
Int macaulay_bound(Int a, Int i);

/// With a terminal zero appended, sums the increases a(i+1) - a(i) over
/// i >= least index with a(i) <= i. Zero exactly on O-sequences.
Int deficit(const HVector& h);

/// h-vector of a complete intersection of type (d, a):
/// (1, 2, ..., m-1, m, ..., m, m-1, ..., 2, 1) with m = min(d, a),
/// ending in degree d + a - 2. Sums to d * a.
HVector ci_hvector(Int d, Int a);

/// Least k with h(k) < k + 1: the degree where the data departs from the
/// polynomial-ring staircase, numerically the initial degree of the ideal.
Int initial_degree(const HVector& h);

}  // namespace nacm
