// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion re-derives its expectations instead of trusting
// intermediate state from another one.

#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "nacm/bdl.hpp"
#include "nacm/betti.hpp"
#include "nacm/curves.hpp"
#include "nacm/hvector.hpp"
#include "nacm/io.hpp"
#include "nacm/macaulify.hpp"
#include "nacm/sequences.hpp"

#include "fixtures.hpp"
#include "property_suite.hpp"

using namespace nacm;
using properties::expect;

namespace {

std::vector<Int> degrees_of(const BdlSequence& sequence) {
  std::vector<Int> out;
  for (const BdlStep& st : sequence.steps) {
    expect(st.a == 1, "expected a height-one step");
    out.push_back(st.d);
  }
  return out;
}

std::string show(const std::vector<Int>& values) { return format_values(values); }

// --- criterion bodies ---

void ci_pair_diagonal() {
  auto [run, final_table] = macaulify_table(fixtures::table(fixtures::ci_pair_diagram));
  expect(run.steps == fixtures::ci_pair_diagonal_steps,
         "steps differ: got " + format_sequence(run.steps));
  expect(run.final_hvector == fixtures::hv(fixtures::ci_pair_final_hvector),
         "final h-vector differs: got " + format_hvector(run.final_hvector));
  expect(numerically_equivalent(final_table, fixtures::table(fixtures::ci_pair_result_diagram)),
         "final table is not numerically equivalent to the printed one");
}

void ci_pair_staircase() {
  HVector h0 = fixtures::hv(fixtures::ci_pair_hvector);
  HVectorMacaulification run = macaulify_hvector(h0);
  expect(degrees_of(run.steps) == fixtures::ci_pair_staircase_degrees,
         "degrees differ: got " + format_sequence(run.steps));
  expect(run.final_hvector == macaulify_table(fixtures::table(fixtures::ci_pair_diagram))
                                  .first.final_hvector,
         "routes land on different h-vectors");
  Int delta = deficit(h0);
  expect(run.steps.total_height() == 3 && static_cast<Int>(run.steps.steps.size()) == 3 &&
             delta == 3,
         "height, step count, and deficit must all equal 3");
}

void mixed_triple_staircase() {
  HVector h0 = fixtures::hv(fixtures::mixed_triple_hvector);
  HVectorMacaulification run = macaulify_hvector(h0);
  expect(degrees_of(run.steps) == fixtures::mixed_triple_staircase_degrees,
         "degrees differ: got " + format_sequence(run.steps));
  expect(run.trace.size() == fixtures::mixed_triple_intermediates.size(),
         "wrong number of intermediate h-vectors");
  for (std::size_t k = 0; k < run.trace.size(); ++k)
    expect(run.trace[k].after == fixtures::hv(fixtures::mixed_triple_intermediates[k]),
           "intermediate " + std::to_string(k + 1) +
               " differs: got " + format_hvector(run.trace[k].after));
  ResolutionProfile profile =
      profile_from_table(fixtures::table(fixtures::mixed_triple_diagram));
  for (const BdlStep& st : run.steps.steps) profile = apply_bdl_profile(profile, st);
  expect(diagonal_report(remove_common_pairs(profile)).all_positive(),
         "final profile still has a negative diagonal entry");
}

void cubed_line_both_routes() {
  BettiTable t = fixtures::table(fixtures::cubed_line_diagram);
  HVector h0 = fixtures::hv(fixtures::cubed_line_hvector);
  expect(hvector_from_profile(profile_from_table(t)) == h0, "fixture h-vector drifted");

  ProfileMacaulification diag = macaulify_profile(profile_from_table(t));
  expect(diag.steps == fixtures::cubed_line_diagonal_steps,
         "diagonal steps differ: got " + format_sequence(diag.steps));

  HVectorMacaulification stair = macaulify_hvector(h0);
  expect(degrees_of(stair.steps) == fixtures::cubed_line_staircase_degrees,
         "staircase degrees differ: got " + format_sequence(stair.steps));
  expect(deficit(h0) == 9, "deficit must be 9");

  NormalizationResult norm = normalize(diag.steps, h0, initial_degree(h0));
  expect(!norm.swap_rows.empty() &&
             norm.swap_rows.front() == fixtures::cubed_line_swap_rows.front(),
         "first swap row differs: got " + show(norm.swap_rows.front()));
  expect(norm.swap_rows.back() == fixtures::cubed_line_swap_rows.back(),
         "last swap row differs: got " + show(norm.swap_rows.back()));
  expect(diag.final_hvector == stair.final_hvector, "routes land on different h-vectors");
}

void eleven_points_diagonal() {
  auto [run, final_table] = macaulify_table(fixtures::table(fixtures::eleven_points_diagram));
  expect(run.steps == fixtures::eleven_points_diagonal_steps,
         "steps differ: got " + format_sequence(run.steps));
  expect(run.final_hvector == fixtures::hv(fixtures::eleven_points_final_hvector),
         "final h-vector differs: got " + format_hvector(run.final_hvector));
  expect(numerically_equivalent(final_table,
                                fixtures::table(fixtures::eleven_points_result_diagram)),
         "final table does not reduce to the printed one");
}

void four_quartics_diagonal() {
  auto [run, final_table] = macaulify_table(fixtures::table(fixtures::four_quartics_diagram));
  expect(run.steps.steps.size() == 7,
         "expected exactly seven links, got " + std::to_string(run.steps.steps.size()));
  expect(run.final_hvector == fixtures::hv(fixtures::four_quartics_final_hvector),
         "final h-vector differs: got " + format_hvector(run.final_hvector));
  expect(numerically_equivalent(final_table,
                                fixtures::table(fixtures::four_quartics_result_diagram)),
         "final table is not numerically equivalent to the printed one");
}

void family_sweep() {
  for (Int n = 1; n <= 50; ++n) {
    FamilyConstruction fam = construct_smooth_nacm(n);
    std::string tag = "n = " + std::to_string(n) + ": ";
    expect(fam.result.degree == (9 * n * n + 9 * n + 2) / 2, tag + "wrong result degree");
    std::vector<Int> want;
    for (Int k = 0; k < n; ++k) want.push_back(3 * n + 2);
    for (Int k = 0; k < n + 1; ++k) want.push_back(3 * n + 1);
    for (Int k = 0; k < n - 1; ++k) want.push_back(3 * n);
    expect(fam.character.values == want && fam.character.sigma() == 3 * n,
           tag + "wrong character");
    expect(fam.smoothability.ok(), tag + "result not smoothable");
    const SmoothabilityReport& y = fam.intermediate_smoothability;
    expect(y.gap_free && y.values_at_least_sigma && y.sigma_large_enough && y.enough_at_sigma &&
               !y.enough_above_sigma,
           tag + "intermediate must fail exactly the last condition");
    expect(!is_o_sequence_codim2(minimal_curve(n).hvector),
           tag + "minimal curve h-vector must not be an O-sequence");
  }
}

void property_suite() {
  std::string first;
  int failures = properties::run_suite(1000, &first);
  expect(failures == 0,
         std::to_string(failures) + " of 1000 instances failed; first: " + first);
}

// True when some admissible ordered sequence of `len` height-one links with
// degrees <= cap lands on an O-sequence.
bool reachable(const HVector& h, Int len, Int cap) {
  if (len == 0) return is_o_sequence_codim2(h);
  for (Int d = initial_degree(h); d <= cap; ++d)
    if (reachable(apply_bdl_hvector(h, {d, 1}), len - 1, cap)) return true;
  return false;
}

void increasing_winners(const HVector& h, Int lo, Int cap, Int remaining,
                        std::vector<Int>& cur, std::vector<std::vector<Int>>& winners) {
  if (remaining == 0) {
    if (is_o_sequence_codim2(h)) winners.push_back(cur);
    return;
  }
  for (Int d = std::max(lo, initial_degree(h)); d <= cap; ++d) {
    cur.push_back(d);
    increasing_winners(apply_bdl_hvector(h, {d, 1}), d + 1, cap, remaining - 1, cur, winners);
    cur.pop_back();
  }
}

void minimality_oracle() {
  int qualifying = 0;
  for (const std::string* diagram :
       {&fixtures::ci_pair_diagram, &fixtures::mixed_triple_diagram,
        &fixtures::cubed_line_diagram, &fixtures::eleven_points_diagram,
        &fixtures::four_quartics_diagram}) {
    BettiTable t = fixtures::table(*diagram);
    HVector h0 = hvector_from_profile(profile_from_table(t));
    Int delta = deficit(h0);
    if (delta > 4) continue;
    ++qualifying;
    Int cap = t.max_twist() + delta + 2;
    for (Int len = 1; len < delta; ++len)
      expect(!reachable(h0, len, cap),
             "a sequence shorter than the deficit reached an O-sequence");
    std::vector<std::vector<Int>> winners;
    std::vector<Int> cur;
    increasing_winners(h0, 0, cap, delta, cur, winners);
    expect(winners.size() == 1,
           "expected a unique increasing repair, found " + std::to_string(winners.size()));
    expect(winners.front() == degrees_of(macaulify_hvector(h0).steps),
           "the unique increasing repair is not the staircase one: " + show(winners.front()));
  }
  expect(qualifying == 2, "expected exactly two desk-scale fixtures");
}

void round_trips() {
  // Characters with sigma <= 5 and values <= 8 against their h-vectors.
  long long seen = 0;
  for (Int sigma = 1; sigma <= 5; ++sigma) {
    std::vector<Int> entries(static_cast<std::size_t>(sigma), sigma);
    while (true) {
      NumericalCharacter c{entries};
      HVector h = hvector_from_character(c);
      expect(character_from_hvector(h) == c, "character round trip failed at " + show(entries));
      expect(hvector_from_character(character_from_hvector(h)) == h,
             "h-vector round trip failed at " + format_hvector(h));
      expect(h.sum() == c.degree_sum(), "degree bookkeeping differs at " + show(entries));
      ++seen;
      std::size_t k = entries.size();
      while (k > 0 && entries[k - 1] == (k == 1 ? Int{8} : entries[k - 2])) --k;
      if (k == 0) break;
      ++entries[k - 1];
      for (std::size_t j = k; j < entries.size(); ++j) entries[j] = sigma;
    }
  }
  expect(seen > 200, "enumeration unexpectedly small");

  for (const std::string* diagram :
       {&fixtures::ci_pair_diagram, &fixtures::ci_pair_result_diagram,
        &fixtures::mixed_triple_diagram, &fixtures::mixed_triple_result_diagram,
        &fixtures::cubed_line_diagram, &fixtures::eleven_points_diagram,
        &fixtures::eleven_points_result_diagram, &fixtures::four_quartics_diagram,
        &fixtures::four_quartics_result_diagram}) {
    BettiTable t = fixtures::table(*diagram);
    expect(parse_betti_text(render_betti_text(t), t.num_vars) == t,
           "text render round trip failed");
    nlohmann::json jt = t;
    expect(jt.get<BettiTable>() == t, "table JSON round trip failed");
  }
  for (const std::vector<Int>* values :
       {&fixtures::ci_pair_hvector, &fixtures::ci_pair_final_hvector,
        &fixtures::mixed_triple_hvector, &fixtures::cubed_line_hvector,
        &fixtures::eleven_points_final_hvector, &fixtures::four_quartics_final_hvector}) {
    HVector h = fixtures::hv(*values);
    nlohmann::json jh = h;
    expect(jh.get<HVector>() == h, "h-vector JSON round trip failed");
  }
  for (const BdlSequence* seq :
       {&fixtures::ci_pair_diagonal_steps, &fixtures::cubed_line_diagonal_steps,
        &fixtures::eleven_points_diagonal_steps}) {
    nlohmann::json js = *seq;
    expect(js.get<BdlSequence>() == *seq, "step sequence JSON round trip failed");
  }
}

}  // namespace

int main() {
  struct Criterion {
    std::string name;
    std::function<void()> run;
  };
  const std::vector<Criterion> criteria = {
      {"ci pair: one diagonal step to the printed table", ci_pair_diagonal},
      {"ci pair: staircase route agrees with the diagonal route", ci_pair_staircase},
      {"mixed triple: staircase degrees, intermediates, positive diagonal",
       mixed_triple_staircase},
      {"cubed line: both routes, deficit nine, swap-table endpoints", cubed_line_both_routes},
      {"eleven points: four links from a length-three input", eleven_points_diagonal},
      {"four quartics: seven links to the printed h-vector", four_quartics_diagonal},
      {"family sweep n = 1..50: degrees, characters, sharp smoothability", family_sweep},
      {"property suite: 1000 seeded instances, zero failures", property_suite},
      {"minimality: no shorter repair, unique increasing repair", minimality_oracle},
      {"round trips: characters, diagrams, JSON", round_trips},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    try {
      c.run();
      std::cout << "[PASS] " << c.name << "\n";
    } catch (const std::exception& e) {
      ++failed;
      std::cout << "[FAIL] " << c.name << ": " << e.what() << "\n";
    }
  }
  return failed == 0 ? 0 : 1;
}
