#include "nacm/sequences.hpp"

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>

namespace nacm {

namespace {

std::vector<Int> degree_row(const BdlSequence& sequence) {
  std::vector<Int> row;
  row.reserve(sequence.steps.size());
  for (const auto& step : sequence.steps) row.push_back(step.d);
  return row;
}

// Whether `sequence` can be applied to `start`, and if so the resulting
// h-vector.
bool admissible(const BdlSequence& sequence, const HVector& start, HVector& out) {
  try {
    out = apply_sequence(start, sequence).first;
  } catch (const input_error&) {
    return false;
  }
  return true;
}

std::string render_degrees(const std::vector<Int>& degrees) {
  std::ostringstream out;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (i > 0) out << ' ';
    out << degrees[i];
  }
  return out.str();
}

// The multiset {d_i - i} is preserved by adjacent swaps, so the normal form
// is determined by it. For each prefix length b, b copies of the initial
// degree a consume values a, a-1, ..., a-b+1; the remaining values, sorted
// ascending, give tail degrees u_k + (b + k), which must exceed a. At most
// one b admits this: a longer prefix leaves the value a-b in the tail of the
// shorter one, capping its minimum at exactly the forbidden bound.
bool canonical_for_prefix(std::vector<Int> values, Int a, Int b, CanonicalSequence& out) {
  for (Int j = 0; j < b; ++j) {
    const auto it = std::find(values.begin(), values.end(), a - j);
    if (it == values.end()) return false;
    values.erase(it);
  }
  std::sort(values.begin(), values.end());
  std::vector<Int> gs;
  gs.reserve(values.size());
  for (std::size_t k = 0; k < values.size(); ++k) {
    const Int g = checked_add(values[k], b + static_cast<Int>(k));
    if (g <= a) return false;
    gs.push_back(g);
  }
  out = CanonicalSequence{a, b, std::move(gs), b + static_cast<Int>(values.size())};
  return true;
}

CanonicalSequence canonical_from_values(const std::vector<Int>& values, Int a) {
  CanonicalSequence found;
  int hits = 0;
  for (Int b = static_cast<Int>(values.size()); b >= 0; --b) {
    CanonicalSequence candidate;
    if (canonical_for_prefix(values, a, b, candidate)) {
      found = std::move(candidate);
      ++hits;
    }
  }
  if (hits != 1) {
    throw defect_error("normal form is not unique for the given step multiset");
  }
  return found;
}

}  // namespace

BdlSequence CanonicalSequence::to_sequence() const {
  BdlSequence out;
  out.steps.reserve(static_cast<std::size_t>(b) + gs.size());
  for (Int j = 0; j < b; ++j) out.steps.push_back({initial_degree, 1});
  for (const Int g : gs) out.steps.push_back({g, 1});
  return out;
}

BdlSequence expand_sequence(const BdlSequence& sequence) {
  BdlSequence out;
  for (const auto& step : sequence.steps) {
    if (step.d < 1 || step.a < 1) {
      throw input_error("basic double link parameters must be positive");
    }
    for (Int j = 0; j < step.a; ++j) out.steps.push_back({step.d, 1});
  }
  return out;
}

BdlSequence swap_adjacent(const BdlSequence& sequence, std::size_t i, Int a0) {
  if (i + 1 >= sequence.steps.size()) {
    throw input_error("swap position out of range");
  }
  const BdlStep first = sequence.steps[i];
  const BdlStep second = sequence.steps[i + 1];
  if (first.a != 1 || second.a != 1) {
    throw input_error("only height-one steps can be swapped");
  }
  if (second.d == a0) {
    throw input_error("steps of the minimal degree cannot move left");
  }
  if (second.d < 2) {
    throw input_error("swap would produce a nonpositive degree");
  }
  BdlSequence out = sequence;
  out.steps[i] = {second.d - 1, 1};
  out.steps[i + 1] = {first.d + 1, 1};
  return out;
}

NormalizationResult normalize(const BdlSequence& sequence, const HVector& start, Int a) {
  if (a != initial_degree(start)) {
    throw input_error("normalization degree must match the initial degree of the h-vector");
  }
  BdlSequence current = expand_sequence(sequence);
  HVector base;
  if (!admissible(current, start, base)) {
    throw input_error("step sequence is not admissible from the given h-vector");
  }

  NormalizationResult result;
  result.swap_rows.push_back(degree_row(current));

  const std::size_t n = current.steps.size();
  // Each applied swap removes exactly one adjacent inversion.
  const std::size_t budget = n * (n + 1) / 2 + 1;
  std::size_t applied = 0;
  for (;;) {
    if (applied > budget) {
      throw defect_error("normalization did not terminate within the inversion budget");
    }
    bool swapped = false;
    for (std::size_t i = 0; i + 1 < current.steps.size(); ++i) {
      // d_i - i > d_{i+1} - (i+1) collapses to a plain degree non-increase.
      if (current.steps[i].d < current.steps[i + 1].d) continue;
      if (current.steps[i + 1].d == a) continue;
      BdlSequence candidate = swap_adjacent(current, i, a);
      HVector after;
      if (!admissible(candidate, start, after)) continue;
      if (!(after == base)) {
        throw defect_error("adjacent swap changed the resulting h-vector");
      }
      current = std::move(candidate);
      result.swap_rows.push_back(degree_row(current));
      ++applied;
      swapped = true;
      break;
    }
    if (!swapped) break;
  }

  std::vector<Int> values;
  values.reserve(current.steps.size());
  for (std::size_t i = 0; i < current.steps.size(); ++i) {
    values.push_back(current.steps[i].d - static_cast<Int>(i));
  }
  CanonicalSequence canonical = canonical_from_values(values, a);
  if (!(current == canonical.to_sequence())) {
    throw defect_error("swap rewriting stopped short of the normal form: reached " +
                       render_degrees(degree_row(current)) + ", expected " +
                       render_degrees(degree_row(canonical.to_sequence())));
  }
  result.canonical = std::move(canonical);
  return result;
}

bool sequences_equivalent(const BdlSequence& lhs, const BdlSequence& rhs, const HVector& start) {
  const auto [h1, height1] = apply_sequence(start, lhs);
  const auto [h2, height2] = apply_sequence(start, rhs);
  return h1 == h2 && height1 == height2;
}

}  // namespace nacm
