#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "nacm/macaulify.hpp"

using namespace nacm;

namespace {

ResolutionProfile reduced_profile(const std::string& diagram) {
  return remove_common_pairs(profile_from_table(fixtures::table(diagram)));
}

std::vector<Int> degrees_of(const BdlSequence& seq) {
  std::vector<Int> out;
  for (const BdlStep& st : seq.steps) out.push_back(st.d);
  return out;
}

}  // namespace

TEST_CASE("acm criteria verdict") {
  SUBCASE("complete intersection is numerically ACM with a witness") {
    ResolutionProfile p;
    p.s.insert(4);
    p.r.insert(2, 2);
    AcmVerdict v = check_numerically_acm(p);
    CHECK(v.verdict);
    CHECK(v.o_sequence);
    CHECK(v.counting);
    CHECK(v.diagonal);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->rows == 1);
    CHECK(v.witness->cols == 2);
    CHECK(v.witness->diagonal == std::vector<Int>{2});
    CHECK(v.witness->superdiagonal == std::vector<Int>{2});
  }
  SUBCASE("ci pair fails every criterion") {
    AcmVerdict v = check_numerically_acm(reduced_profile(fixtures::ci_pair_diagram));
    CHECK(!v.verdict);
    CHECK(!v.o_sequence);
    CHECK(!v.counting);
    CHECK(!v.diagonal);
    CHECK(!v.witness.has_value());
  }
  SUBCASE("the verified end state of the staircase route passes") {
    AcmVerdict v = check_numerically_acm(reduced_profile(fixtures::mixed_triple_result_diagram));
    CHECK(v.verdict);
  }
  SUBCASE("shared values must be removed first") {
    ResolutionProfile p;
    p.s.insert(5);
    p.s.insert(3);
    p.r.insert(5);
    p.r.insert(2);
    p.r.insert(1);
    REQUIRE(!validate(p).has_value());
    CHECK_THROWS_WITH_AS(check_numerically_acm(p), doctest::Contains("share"), input_error);
  }
  SUBCASE("hypothesis violation is an input error") {
    ResolutionProfile p;
    p.s.insert(9);
    p.s.insert(2);
    p.r.insert(5);
    p.r.insert(3, 2);
    REQUIRE(!validate(p).has_value());
    CHECK_THROWS_WITH_AS(check_numerically_acm(p), doctest::Contains("hypothesis"),
                         input_error);
  }
}

TEST_CASE("hilbert-burch witness") {
  SUBCASE("linear bidiagonal matrix") {
    ResolutionProfile p;
    p.s.insert(3, 2);
    p.r.insert(2, 3);
    HilbertBurchMatrix m = hilbert_burch_witness(p);
    CHECK(m.rows == 2);
    CHECK(m.cols == 3);
    CHECK(m.diagonal == std::vector<Int>{1, 1});
    CHECK(m.superdiagonal == std::vector<Int>{1, 1});
  }
  SUBCASE("witness for the repaired ci pair") {
    ResolutionProfile p = reduced_profile(fixtures::ci_pair_result_diagram);
    HilbertBurchMatrix m = hilbert_burch_witness(p);
    CHECK(m.rows + 1 == m.cols);
    for (Int e : m.diagonal) CHECK(e > 0);
    for (Int e : m.superdiagonal) CHECK(e > 0);
  }
  SUBCASE("refused for non-ACM data") {
    CHECK_THROWS_AS(hilbert_burch_witness(reduced_profile(fixtures::ci_pair_diagram)),
                    input_error);
  }
}

TEST_CASE("diagonal route") {
  SUBCASE("ci pair takes one step") {
    ProfileMacaulification m =
        macaulify_profile(profile_from_table(fixtures::table(fixtures::ci_pair_diagram)));
    CHECK(m.steps == fixtures::ci_pair_diagonal_steps);
    CHECK(m.final_hvector.values() == fixtures::ci_pair_final_hvector);
    CHECK(m.verdict.verdict);
    REQUIRE(m.trace.size() == 1);
    CHECK(m.trace[0].step == BdlStep{12, 3});
  }
  SUBCASE("cubed line takes six steps") {
    ProfileMacaulification m =
        macaulify_profile(profile_from_table(fixtures::table(fixtures::cubed_line_diagram)));
    CHECK(m.steps == fixtures::cubed_line_diagonal_steps);
  }
  SUBCASE("eleven points, a codimension-three input") {
    ProfileMacaulification m =
        macaulify_profile(profile_from_table(fixtures::table(fixtures::eleven_points_diagram)));
    CHECK(m.steps == fixtures::eleven_points_diagonal_steps);
    CHECK(m.final_hvector.values() == fixtures::eleven_points_final_hvector);
  }
  SUBCASE("four quartics take seven steps") {
    ProfileMacaulification m =
        macaulify_profile(profile_from_table(fixtures::table(fixtures::four_quartics_diagram)));
    CHECK(m.steps.steps.size() == 7);
    CHECK(m.final_hvector.values() == fixtures::four_quartics_final_hvector);
  }
  SUBCASE("already ACM data takes zero steps") {
    ProfileMacaulification m =
        macaulify_profile(profile_from_table(fixtures::table(fixtures::mixed_triple_result_diagram)));
    CHECK(m.steps.steps.empty());
  }
}

TEST_CASE("diagonal route transforms the table alongside") {
  auto [m, table] = macaulify_table(fixtures::table(fixtures::eleven_points_diagram));
  CHECK(table == fixtures::table(fixtures::eleven_points_result_diagram));
  CHECK(numerically_equivalent(table, fixtures::table(fixtures::eleven_points_result_diagram)));

  auto [m2, table2] = macaulify_table(fixtures::table(fixtures::ci_pair_diagram));
  CHECK(numerically_equivalent(table2, fixtures::table(fixtures::ci_pair_result_diagram)));

  auto [m3, table3] = macaulify_table(fixtures::table(fixtures::four_quartics_diagram));
  CHECK(table3 == fixtures::table(fixtures::four_quartics_result_diagram));
}

TEST_CASE("staircase route") {
  SUBCASE("ci pair degrees rise through even gaps") {
    HVectorMacaulification m = macaulify_hvector(HVector(fixtures::ci_pair_hvector));
    CHECK(degrees_of(m.steps) == fixtures::ci_pair_staircase_degrees);
    CHECK(m.final_hvector.values() == fixtures::ci_pair_final_hvector);
  }
  SUBCASE("mixed triple reproduces the four printed lines") {
    HVectorMacaulification m = macaulify_hvector(HVector(fixtures::mixed_triple_hvector));
    CHECK(degrees_of(m.steps) == fixtures::mixed_triple_staircase_degrees);
    REQUIRE(m.trace.size() == fixtures::mixed_triple_intermediates.size());
    for (std::size_t i = 0; i < m.trace.size(); ++i)
      CHECK(m.trace[i].after.values() == fixtures::mixed_triple_intermediates[i]);
  }
  SUBCASE("cubed line degrees") {
    HVectorMacaulification m = macaulify_hvector(HVector(fixtures::cubed_line_hvector));
    CHECK(degrees_of(m.steps) == fixtures::cubed_line_staircase_degrees);
  }
  SUBCASE("O-sequences are fixed points") {
    HVectorMacaulification m = macaulify_hvector(HVector({1, 2, 3, 3, 1}));
    CHECK(m.steps.steps.empty());
    CHECK(m.final_hvector.values() == std::vector<Int>{1, 2, 3, 3, 1});
  }
  SUBCASE("growth above the staircase is rejected as input, not as a defect") {
    CHECK_THROWS_AS(macaulify_hvector(HVector({1, 2, 4})), input_error);
    CHECK_THROWS_AS(macaulify_hvector(HVector({1, 2, 4, 1})), input_error);
  }
}

TEST_CASE("the two routes agree") {
  for (const std::string* diagram :
       {&fixtures::ci_pair_diagram, &fixtures::mixed_triple_diagram, &fixtures::cubed_line_diagram,
        &fixtures::eleven_points_diagram, &fixtures::four_quartics_diagram}) {
    CrossCheckReport report = cross_check(profile_from_table(fixtures::table(*diagram)));
    CHECK(report.agree);
    CHECK(report.by_profile.steps.total_height() == report.deficit_value);
  }
}

TEST_CASE("instance generator is deterministic and stays in the calculus") {
  InstanceParams params;
  ResolutionProfile a = random_instance(7, params);
  ResolutionProfile b = random_instance(7, params);
  CHECK(a == b);
  ResolutionProfile c = random_instance(8, params);
  std::set<std::uint64_t> seen;
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    ResolutionProfile p = random_instance(seed, params);
    CHECK(!validate(p).has_value());
    CHECK(p.s.min() > p.r.min());
  }
  (void)c;
}
