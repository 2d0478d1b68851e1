#include "nacm/hvector.hpp"

#include <algorithm>
#include <sstream>

namespace nacm {

HVector::HVector(std::vector<Int> values) : values_(std::move(values)) {
  while (!values_.empty() && values_.back() == 0) values_.pop_back();
  if (values_.empty()) throw input_error("h-vector must have a nonzero entry");
  if (values_[0] != 1) throw input_error("h-vector must start with h(0) = 1");
}

Int HVector::at(Int k) const {
  if (k < 0 || k >= static_cast<Int>(values_.size())) return 0;
  return values_[static_cast<std::size_t>(k)];
}

Int HVector::sum() const {
  Int out = 0;
  for (Int v : values_) out = checked_add(out, v);
  return out;
}

Int HVector::weighted_sum() const {
  Int out = 0;
  for (std::size_t k = 0; k < values_.size(); ++k)
    out = checked_add(out, checked_mul(static_cast<Int>(k), values_[k]));
  return out;
}

HVector hvector_from_profile(const ResolutionProfile& profile) {
  require_valid(profile);
  Int horizon = std::max(profile.s.max(), profile.r.max()) + 1;
  std::vector<Int> values;
  values.reserve(static_cast<std::size_t>(horizon) + 1);
  for (Int k = 0; k <= horizon; ++k) {
    Int h = k + 1;
    for (const auto& [v, c] : profile.r.runs())
      if (v <= k) h = checked_add(h, -checked_mul(c, k - v + 1));
    for (const auto& [v, c] : profile.s.runs())
      if (v <= k) h = checked_add(h, checked_mul(c, k - v + 1));
    values.push_back(h);
  }
  if (values[static_cast<std::size_t>(horizon)] != 0 ||
      values[static_cast<std::size_t>(horizon - 1)] != 0)
    throw defect_error("h-vector of a valid profile failed to vanish past the largest twist");
  return HVector(std::move(values));
}

std::vector<Int> difference(const std::vector<Int>& values) {
  std::vector<Int> out;
  out.reserve(values.size());
  Int prev = 0;
  for (Int v : values) {
    out.push_back(v - prev);
    prev = v;
  }
  return out;
}

bool is_o_sequence_codim2(const HVector& h) {
  if (h.at(1) > 2) throw input_error("h(1) > 2 is outside the codimension-two calculus");
  bool capped = false;  // seen a degree with h(i) <= i
  for (Int i = 0; i <= h.last_degree(); ++i) {
    Int v = h.at(i);
    if (v < 0 || v > i + 1) return false;
    if (capped && v > h.at(i - 1)) return false;
    if (v <= i) capped = true;
  }
  return true;
}

Int macaulay_bound(Int a, Int i) {
  if (i < 1) throw input_error("macaulay_bound needs degree >= 1");
  if (a <= 0) return 0;
  // Greedy binomial expansion a = C(k_i, i) + C(k_{i-1}, i-1) + ...,
  // then the bound is the same sum with k and the lower index bumped by one.
  auto choose = [](Int n, Int k) -> Int {
    if (k < 0 || n < k) return 0;
    Int out = 1;
    for (Int t = 1; t <= k; ++t) out = checked_mul(out, n - k + t) / t;
    return out;
  };
  Int remaining = a;
  Int bound = 0;
  Int j = i;
  while (remaining > 0 && j >= 1) {
    Int k = j;
    while (choose(k + 1, j) <= remaining) ++k;
    remaining -= choose(k, j);
    bound = checked_add(bound, choose(k + 1, j + 1));
    --j;
  }
  if (remaining != 0) throw defect_error("binomial expansion failed to terminate");
  return bound;
}

bool is_o_sequence_macaulay(const std::vector<Int>& values) {
  if (values.empty() || values[0] != 1) return false;
  for (Int v : values)
    if (v < 0) return false;
  for (std::size_t i = 1; i + 1 < values.size(); ++i) {
    if (values[i + 1] > macaulay_bound(values[i], static_cast<Int>(i))) return false;
  }
  return true;
}

Int deficit(const HVector& h) {
  if (h.at(1) > 2) throw input_error("h(1) > 2 is outside the codimension-two calculus");
  Int e = h.last_degree();
  Int start = e + 1;  // terminal zero always satisfies a(i) <= i
  for (Int i = 0; i <= e; ++i) {
    if (h.at(i) <= i) {
      start = i;
      break;
    }
  }
  Int delta = 0;
  for (Int i = start; i <= e; ++i) {
    Int rise = h.at(i + 1) - h.at(i);
    if (rise > 0) delta = checked_add(delta, rise);
  }
  // On staircase-prefixed data a zero deficit must mean an O-sequence.
  bool staircase = true;
  for (Int i = 0; i < start; ++i)
    if (h.at(i) != i + 1) staircase = false;
  if (staircase && (delta == 0) != is_o_sequence_codim2(h))
    throw defect_error("deficit and O-sequence test disagree on staircase-prefixed data");
  return delta;
}

HVector ci_hvector(Int d, Int a) {
  if (d < 1 || a < 1) throw input_error("complete intersection type must be positive");
  Int m = std::min(d, a);
  Int top = d + a - 2;
  std::vector<Int> values;
  values.reserve(static_cast<std::size_t>(top) + 1);
  for (Int k = 0; k <= top; ++k)
    values.push_back(std::min({k + 1, m, top - k + 1}));
  return HVector(std::move(values));
}

Int initial_degree(const HVector& h) {
  for (Int k = 0;; ++k)
    if (h.at(k) < k + 1) return k;
}

}  // namespace nacm
