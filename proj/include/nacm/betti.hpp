#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nacm/common.hpp"

namespace nacm {

/// Multiset of integers stored as (value, multiplicity) runs with values
/// strictly decreasing, i.e. the expanded list is non-increasing.
class TwistMultiset {
public:
  TwistMultiset() = default;
  explicit TwistMultiset(const std::vector<Int>& values);

  void insert(Int value, Int count = 1);
  /// Removes `count` copies of `value`; returns false (and removes nothing)
  /// if fewer than `count` copies are present.
  bool remove(Int value, Int count = 1);

  bool empty() const { return runs_.empty(); }
  Int total() const;
  Int sum() const;
  Int min() const;  // requires non-empty
  Int max() const;  // requires non-empty
  Int multiplicity(Int value) const;
  Int count_at_most(Int k) const;

  std::vector<Int> expanded() const;
  TwistMultiset shifted(Int delta) const;

  const std::vector<std::pair<Int, Int>>& runs() const { return runs_; }

  friend bool operator==(const TwistMultiset&, const TwistMultiset&) = default;

private:
  std::vector<std::pair<Int, Int>> runs_;
};

std::string to_string(const TwistMultiset& m);

/// Graded Betti table of a cyclic quotient: entries map
/// (homological position i, internal degree j) -> multiplicity > 0.
struct BettiTable {
  Int num_vars = 0;
  std::map<std::pair<Int, Int>, Int> entries;

  Int beta(Int position, Int twist) const;
  /// Accumulates into the entry, erasing it when the multiplicity hits zero.
  void add(Int position, Int twist, Int count);
  Int max_position() const;
  Int max_twist() const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

/// Twists of a length-two-ish resolution shape: s at even homological
/// positions (>= 2), r at odd positions. For honest codimension-two data
/// |r| = |s| + 1 and sum(r) = sum(s).
struct ResolutionProfile {
  TwistMultiset s;
  TwistMultiset r;

  friend bool operator==(const ResolutionProfile&, const ResolutionProfile&) = default;
};

struct Violation {
  std::string invariant;
  std::string detail;
};

/// Main-diagonal data of the matrix (s_i - r_j), 1-based indices.
struct DiagonalReport {
  struct Entry {
    Int index;    // 1..|s|
    Int s_value;
    Int r_value;
    Int value;    // s_value - r_value
  };
  /// Negative diagonal entries ordered bottom-right first, i.e. by
  /// non-decreasing r_value with larger indices preceding on ties.
  struct Negative {
    Int index;
    Int degree;   // r_value at that index
    Int height;   // r_value - s_value > 0
  };
  std::vector<Entry> entries;
  std::vector<Negative> negatives;

  bool all_positive() const { return negatives.empty(); }
};

std::optional<Violation> validate(const BettiTable& table);
std::optional<Violation> validate(const ResolutionProfile& profile);
void require_valid(const BettiTable& table);
void require_valid(const ResolutionProfile& profile);

ResolutionProfile profile_from_table(const BettiTable& table);

/// Removes every value shared by s and r, once per shared occurrence.
ResolutionProfile remove_common_pairs(ResolutionProfile profile);

/// Requires s and r disjoint (apply remove_common_pairs first).
DiagonalReport diagonal_report(const ResolutionProfile& profile);

/// Formal cancellation: repeatedly removes min(beta(p,t), beta(p+1,t)) from
/// equal twists in adjacent homological positions, scanning lowest position
/// first, then lowest twist, until no cancelable pair remains.
BettiTable numerical_reduction(BettiTable table);

/// Equal entry maps after numerical reduction (num_vars is not compared).
bool numerically_equivalent(const BettiTable& a, const BettiTable& b);

/// sum over i of (-1)^i beta(i, twist); invariant under numerical reduction.
Int alternating_sum(const BettiTable& table, Int twist);

}  // namespace nacm
