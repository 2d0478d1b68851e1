#include "nacm/curves.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace nacm {

namespace {

Int count_value(const std::vector<Int>& values, Int t) {
  return static_cast<Int>(std::count(values.begin(), values.end(), t));
}

void require_valid(const NumericalCharacter& character) {
  const auto& v = character.values;
  if (v.empty()) throw input_error("numerical character must be non-empty");
  const Int sigma = character.sigma();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i + 1 < v.size() && v[i] < v[i + 1]) {
      throw input_error("numerical character values must be non-increasing");
    }
    if (v[i] < sigma) {
      throw input_error("numerical character values must be at least its length");
    }
  }
}

// Staircase values 1, 2, ..., top followed by a tail.
HVector staircase_with_tail(Int top, const std::vector<Int>& tail) {
  std::vector<Int> values;
  values.reserve(static_cast<std::size_t>(top) + tail.size());
  for (Int k = 0; k < top; ++k) values.push_back(k + 1);
  values.insert(values.end(), tail.begin(), tail.end());
  return HVector{values};
}

Int genus_from_hvector(Int degree, const HVector& curve_hvector) {
  return checked_add(1 - degree, curve_hvector.weighted_sum());
}

CurveData make_curve(Int n, HVector curve_h, HVector hyperplane_h, Int module_degree, Int shift) {
  CurveData data;
  data.n = n;
  data.degree = hyperplane_h.sum();
  if (curve_h.sum() != data.degree) {
    throw defect_error("curve h-vector and hyperplane h-vector disagree on the degree");
  }
  data.genus = genus_from_hvector(data.degree, curve_h);
  data.hvector = std::move(curve_h);
  data.hyperplane_hvector = std::move(hyperplane_h);
  data.module_degree = module_degree;
  data.shift = shift;
  return data;
}

NumericalCharacter repeated(std::initializer_list<std::pair<Int, Int>> blocks) {
  NumericalCharacter c;
  for (const auto& [value, count] : blocks) {
    for (Int i = 0; i < count; ++i) c.values.push_back(value);
  }
  return c;
}

}  // namespace

Int NumericalCharacter::degree_sum() const {
  const Int s = sigma();
  Int total = -s * (s - 1) / 2;
  for (const Int v : values) total = checked_add(total, v);
  return total;
}

NumericalCharacter character_from_hvector(const HVector& h) {
  if (!is_o_sequence_codim2(h)) {
    throw input_error("numerical character requires the h-vector of a hyperplane section");
  }
  const Int sigma = initial_degree(h);
  NumericalCharacter character;
  for (Int t = sigma; t <= h.last_degree() + 1; ++t) {
    const Int drop = h.at(t - 1) - h.at(t);
    for (Int i = 0; i < drop; ++i) character.values.push_back(t);
  }
  std::sort(character.values.begin(), character.values.end(), std::greater<Int>());
  if (character.sigma() != sigma) {
    throw defect_error("numerical character length differs from the initial degree");
  }
  return character;
}

HVector hvector_from_character(const NumericalCharacter& character) {
  require_valid(character);
  const Int sigma = character.sigma();
  const Int top = character.values.front();
  std::vector<Int> values;
  values.reserve(static_cast<std::size_t>(top) + 1);
  for (Int t = 0; t < sigma; ++t) values.push_back(t + 1);
  Int current = sigma;
  for (Int t = sigma; t <= top; ++t) {
    current -= count_value(character.values, t);
    values.push_back(current);
  }
  if (current != 0) {
    throw defect_error("character integral did not terminate at zero");
  }
  return HVector{values};
}

bool has_gaps(const NumericalCharacter& character) {
  require_valid(character);
  for (std::size_t i = 0; i + 1 < character.values.size(); ++i) {
    if (character.values[i] - character.values[i + 1] > 1) return true;
  }
  return false;
}

SmoothabilityReport smoothability_check(const NumericalCharacter& character, Int n) {
  if (n < 1) throw input_error("family index must be positive");
  require_valid(character);
  const Int sigma = character.sigma();
  const Int at_sigma = count_value(character.values, sigma);
  const Int above_sigma = count_value(character.values, sigma + 1);

  SmoothabilityReport report;
  report.gap_free = !has_gaps(character);
  report.values_at_least_sigma = character.values.back() >= sigma;
  report.sigma_large_enough = sigma >= 2 * n - 1;
  report.enough_at_sigma = at_sigma >= n - 1;
  report.enough_above_sigma =
      above_sigma > n ||
      (above_sigma == n && character.values.front() <= sigma + 1);
  return report;
}

CurveData minimal_curve(Int n) {
  if (n < 1) throw input_error("family index must be positive");
  const Int product = checked_mul(checked_mul(2 * n - 3, 2 * n - 1), 2 * n + 1);
  if (product % 3 != 0) {
    throw defect_error("genus formula is not integral");
  }

  CurveData data = make_curve(n, staircase_with_tail(2 * n, {-n}),
                              staircase_with_tail(2 * n - 1, {n}), 2 * n - 2, 0);
  if (data.degree != 2 * n * n) {
    throw defect_error("minimal curve degree differs from 2n^2");
  }
  if (data.genus != product / 3) {
    throw defect_error("minimal curve genus differs from the closed form");
  }
  return data;
}

FamilyConstruction construct_smooth_nacm(Int n) {
  FamilyConstruction out;
  out.minimal = minimal_curve(n);
  out.n = n;

  for (Int d = 2 * n + 2; d <= 3 * n + 1; ++d) out.steps.steps.push_back({d, 1});
  out.steps.steps.push_back({3 * n + 1, 1});

  HVector curve_h = out.minimal.hvector;
  HVector plane_h = out.minimal.hyperplane_hvector;
  for (std::size_t k = 0; k + 1 < out.steps.steps.size(); ++k) {
    curve_h = apply_bdl_hvector(curve_h, out.steps.steps[k]);
    plane_h = apply_bdl_hvector(plane_h, out.steps.steps[k]);
  }
  out.intermediate = make_curve(n, curve_h, plane_h, 3 * n - 2, n);
  out.intermediate_character = character_from_hvector(plane_h);
  out.intermediate_smoothability = smoothability_check(out.intermediate_character, n);

  const BdlStep last = out.steps.steps.back();
  curve_h = apply_bdl_hvector(curve_h, last);
  plane_h = apply_bdl_hvector(plane_h, last);
  out.result = make_curve(n, curve_h, plane_h, 3 * n - 1, n + 1);
  out.character = character_from_hvector(plane_h);
  out.smoothability = smoothability_check(out.character, n);

  if (!(out.intermediate.hvector == staircase_with_tail(3 * n, {})) ||
      !(out.intermediate.hyperplane_hvector == staircase_with_tail(3 * n - 1, {2 * n, n}))) {
    throw defect_error("intermediate curve h-vectors differ from the closed forms");
  }
  if (!(out.intermediate_character == repeated({{3 * n + 1, n}, {3 * n, n}, {3 * n - 1, n - 1}}))) {
    throw defect_error("intermediate character differs from the closed form");
  }
  if (out.intermediate_smoothability.ok() || !out.intermediate_smoothability.gap_free ||
      !out.intermediate_smoothability.values_at_least_sigma ||
      !out.intermediate_smoothability.sigma_large_enough ||
      !out.intermediate_smoothability.enough_at_sigma) {
    throw defect_error("intermediate curve must fail exactly the final smoothability condition");
  }

  if (!(out.result.hvector == staircase_with_tail(3 * n + 1, {})) ||
      !(out.result.hyperplane_hvector == staircase_with_tail(3 * n, {2 * n + 1, n}))) {
    throw defect_error("final curve h-vectors differ from the closed forms");
  }
  if (2 * out.result.degree != 9 * n * n + 9 * n + 2) {
    throw defect_error("final curve degree differs from the closed form");
  }
  if (!(out.character == repeated({{3 * n + 2, n}, {3 * n + 1, n + 1}, {3 * n, n - 1}}))) {
    throw defect_error("final character differs from the closed form");
  }
  if (!is_o_sequence_codim2(out.result.hvector) || !out.smoothability.ok()) {
    throw defect_error("final curve must be numerically ACM and smoothable");
  }
  if (out.intermediate_character.degree_sum() != out.intermediate.degree ||
      out.character.degree_sum() != out.result.degree) {
    throw defect_error("character degree formula disagrees with the h-vector degree");
  }
  return out;
}

Int gorenstein_bound(Int degree, Int regularity) {
  if (degree < 1 || regularity < 1) {
    throw input_error("degree and regularity must be positive");
  }
  return checked_mul(degree, regularity);
}

}  // namespace nacm
