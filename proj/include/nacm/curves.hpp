#pragma once

#include <vector>

#include "nacm/bdl.hpp"
#include "nacm/common.hpp"
#include "nacm/hvector.hpp"

namespace nacm {

/// Degrees n_1 >= n_2 >= ... >= n_sigma attached to a space curve; sigma is
/// the least degree of a surface containing it.
struct NumericalCharacter {
  std::vector<Int> values;

  Int sigma() const { return static_cast<Int>(values.size()); }
  Int degree_sum() const;

  friend bool operator==(const NumericalCharacter&, const NumericalCharacter&) = default;
};

/// A curve in the family together with its numerical invariants. The
/// h-vector is the curve one (alternating sums of the Rao-module-free
/// resolution data); hyperplane_hvector is the h-vector of its general
/// hyperplane section.
struct CurveData {
  Int n = 0;
  Int degree = 0;
  Int genus = 0;
  HVector hvector;
  HVector hyperplane_hvector;
  /// Degree where the n-dimensional deficiency module sits, and how far the
  /// links so far have shifted it from the minimal curve's placement.
  Int module_degree = 0;
  Int shift = 0;
};

/// Requires a codimension-two O-sequence. The character lists, for each
/// degree t, -(first difference) copies of t past the initial degree; its
/// length always equals the initial degree.
NumericalCharacter character_from_hvector(const HVector& h);

/// Inverse of character_from_hvector. Requires non-increasing positive
/// values, none below sigma.
HVector hvector_from_character(const NumericalCharacter& character);

/// True when some value between max and min is skipped. Connected characters
/// (no gaps) are exactly those whose h-vector is of decreasing type.
bool has_gaps(const NumericalCharacter& character);

struct SmoothabilityReport {
  bool gap_free = false;
  bool values_at_least_sigma = false;
  bool sigma_large_enough = false;
  bool enough_at_sigma = false;
  bool enough_above_sigma = false;

  bool ok() const {
    return gap_free && values_at_least_sigma && sigma_large_enough && enough_at_sigma &&
           enough_above_sigma;
  }

  friend bool operator==(const SmoothabilityReport&, const SmoothabilityReport&) = default;
};

/// Sufficient conditions for the character to be realized by a smooth
/// connected curve with the same Rao module shape as the n-th minimal curve:
/// gap-free, no value below sigma, sigma >= 2n-1, at least n-1 entries equal
/// to sigma, and at least n entries equal to sigma+1 (with none above
/// sigma+1 allowed in the boundary case of exactly n).
SmoothabilityReport smoothability_check(const NumericalCharacter& character, Int n);

/// Minimal curve of the n-th shifted-module family: degree 2n^2, genus
/// (2n-3)(2n-1)(2n+1)/3, curve h-vector (1, 2, ..., 2n, -n).
CurveData minimal_curve(Int n);

struct FamilyConstruction {
  Int n = 0;
  BdlSequence steps;
  CurveData minimal;
  /// After the first n steps: numerically ACM but not smoothable.
  CurveData intermediate;
  NumericalCharacter intermediate_character;
  SmoothabilityReport intermediate_smoothability;
  /// After the final extra step: numerically ACM and smoothable.
  CurveData result;
  NumericalCharacter character;
  SmoothabilityReport smoothability;
};

/// Applies the degree sequence 2n+2, 2n+3, ..., 3n+1, 3n+1 (heights one) to
/// the n-th minimal curve. The stop one step earlier witnesses that the
/// smoothability conditions are sharp.
FamilyConstruction construct_smooth_nacm(Int n);

/// Largest genus of an arithmetically Gorenstein curve a smooth member can
/// link to, degree * regularity bound; overflow-checked.
Int gorenstein_bound(Int degree, Int regularity);

}  // namespace nacm
