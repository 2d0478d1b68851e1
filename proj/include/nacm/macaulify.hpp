#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "nacm/bdl.hpp"
#include "nacm/betti.hpp"
#include "nacm/common.hpp"
#include "nacm/hvector.hpp"

namespace nacm {

/// Bidiagonal matrix of monomial exponents certifying a positive-diagonal
/// profile: entry (i, i) is x0^diagonal[i], entry (i, i+1) is x1^superdiagonal[i],
/// rows = |s|, cols = |r| = rows + 1. Exponents are strictly positive.
struct HilbertBurchMatrix {
  Int rows = 0;
  Int cols = 0;
  std::vector<Int> diagonal;        // s_i - r_i
  std::vector<Int> superdiagonal;   // s_i - r_{i+1}

  friend bool operator==(const HilbertBurchMatrix&, const HilbertBurchMatrix&) = default;
};

/// Three equivalent tests evaluated independently; disagreement is a defect.
struct AcmVerdict {
  bool o_sequence = false;   // h-vector is an O-sequence
  bool counting = false;     // #{r_i <= k} > #{s_j <= k} for all k >= min(r)
  bool diagonal = false;     // s_i >= r_i along the main diagonal
  bool verdict = false;
  std::optional<HilbertBurchMatrix> witness;
};

/// Requires s and r disjoint and min(s) > min(r) >= 1.
AcmVerdict check_numerically_acm(const ResolutionProfile& profile);

/// Builds and numerically verifies the bidiagonal witness; refuses unless
/// check_numerically_acm holds.
HilbertBurchMatrix hilbert_burch_witness(const ResolutionProfile& profile);

struct ProfileTraceEntry {
  ResolutionProfile profile;  // after removing common pairs
  DiagonalReport report;
  BdlStep step;
};

struct ProfileMacaulification {
  BdlSequence steps;
  ResolutionProfile final_profile;  // reduced, positive diagonal
  HVector final_hvector;
  std::vector<ProfileTraceEntry> trace;
  AcmVerdict verdict;
};

struct HVectorTraceEntry {
  BdlStep step;
  HVector after;
};

struct HVectorMacaulification {
  BdlSequence steps;  // all of height 1, strictly increasing degrees
  HVector final_hvector;
  std::vector<HVectorTraceEntry> trace;
};

/// Diagonal-driven macaulification: repeatedly reduce, pick the bottom-right
/// negative diagonal entry -d at index i, and apply the link (r_i, d).
/// The number of steps equals the number of negative entries at the start.
ProfileMacaulification macaulify_profile(const ResolutionProfile& profile);

/// Same, run from a Betti table; also folds the steps through
/// apply_bdl_table and returns the transformed table.
std::pair<ProfileMacaulification, BettiTable> macaulify_table(const BettiTable& table);

/// Deficit-driven macaulification: while the h-vector is not an O-sequence,
/// find the least i with a(i) <= i and a(i) < a(i+1) and link with (i+2, 1).
/// Terminates in exactly deficit(h) steps with strictly increasing degrees.
HVectorMacaulification macaulify_hvector(const HVector& h);

struct CrossCheckReport {
  ProfileMacaulification by_profile;
  HVectorMacaulification by_hvector;
  Int deficit_value = 0;
  bool agree = false;
};

/// Runs both routes on the same data and checks they land on the same
/// h-vector with total height = step count = deficit. Disagreement is a
/// defect carrying both traces.
CrossCheckReport cross_check(const ResolutionProfile& profile);

struct InstanceParams {
  Int max_syzygies = 5;      // bound for |s| of the seed shape
  Int max_spread = 4;        // gap between consecutive r values in the seed
  int perturbations = 4;     // inverse links applied to the seed
};

/// Deterministic seeded generator of valid profiles with h(1) <= 2. Mixes
/// four shape families (plain staircases, staircases walked backwards
/// through inverse links, staircases with syzygy mass shuffled off the
/// diagonal, and a curated non-O-sequence seed), then scrambles with a few
/// forward links. Every instance keeps min(s) > min(r).
ResolutionProfile random_instance(std::uint64_t seed, const InstanceParams& params = {});

}  // namespace nacm
