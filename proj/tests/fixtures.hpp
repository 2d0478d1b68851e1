#pragma once

// Regression corpus: curve and point configurations with known Betti
// diagrams, h-vectors, and macaulification behavior.

#include <string>
#include <vector>

#include "nacm/bdl.hpp"
#include "nacm/betti.hpp"
#include "nacm/hvector.hpp"
#include "nacm/io.hpp"

namespace fixtures {

// Union of two complete intersections of type (3,3) meeting in a point.
inline const std::string ci_pair_diagram = R"(
                                  0    1    2    3
                          -------------------------
                           0:     1    -    -    -
                           1:     -    -    -    -
                           2:     -    -    -    -
                           3:     -    -    -    -
                           4:     -    -    -    -
                           5:     -    4    -    -
                           6:     -    -    -    -
                           7:     -    -    4    -
                           8:     -    -    -    -
                           9:     -    -    -    1
                          -------------------------
                          Tot:    1    4    4    1
)";

inline const std::string ci_pair_result_diagram = R"(
                                   0    1    2    3
                           -------------------------
                            0:     1    -    -    -
                            1:     -    -    -    -
                                   ...
                            7:     -    -    -    -
                            8:     -    4    -    -
                            9:     -    -    -    -
                           10:     -    -    4    -
                           11:     -    1    -    -
                           12:     -    -    -    1
                           13:     -    -    1    -
                           -------------------------
                           Tot:    1    5    5    1
)";

inline const std::vector<nacm::Int> ci_pair_hvector = {1, 2, 3, 4, 5, 6, 3, 0, -3, -2, -1};
inline const std::vector<nacm::Int> ci_pair_final_hvector = {1, 2, 3, 4, 5, 6, 7, 8, 9, 6, 3};
inline const nacm::BdlSequence ci_pair_diagonal_steps{{{12, 3}}};
inline const std::vector<nacm::Int> ci_pair_staircase_degrees = {10, 12, 14};

// General union of a line, a plane cubic, and a curve linked to a line in a
// complete intersection of type (4,8).
inline const std::string mixed_triple_diagram = R"(
                                 0    1    2    3
                         -------------------------
                          0:     1    -    -    -
                          1:     -    -    -    -
                          2:     -    -    -    -
                          3:     -    -    -    -
                          4:     -    -    -    -
                          5:     -    2    1    -
                          6:     -    -    -    -
                          7:     -    2    3    1
                          8:     -    -    -    -
                          9:     -    2    1    -
                         10:     -    1    -    -
                         11:     -    1    5    2
                         12:     -    1    3    2
                         -------------------------
                         Tot:    1    9   13    5
)";

// The numerically ACM curve the staircase route reaches from mixed_triple.
inline const std::string mixed_triple_result_diagram = R"(
                                   0    1    2    3
                           -------------------------
                            0:     1    -    -    -
                            1:     -    -    -    -
                            2:     -    -    -    -
                            3:     -    -    -    -
                            4:     -    -    -    -
                            5:     -    -    -    -
                            6:     -    -    -    -
                            7:     -    -    -    -
                            8:     -    -    -    -
                            9:     -    2    1    -
                           10:     -    -    -    -
                           11:     -    2    3    1
                           12:     -    1    -    -
                           13:     -    1    1    -
                           14:     -    1    -    -
                           15:     -    1    5    2
                           16:     -    2    4    2
                           17:     -    2    2    -
                           -------------------------
                           Tot:    1   12   16    5
)";

inline const std::vector<nacm::Int> mixed_triple_hvector = {1, 2, 3, 4,  5, 6, 5,
                                                            5, 3, 4, 2, 0, -3, -2};
inline const std::vector<nacm::Int> mixed_triple_staircase_degrees = {10, 15, 17, 18};
inline const std::vector<std::vector<nacm::Int>> mixed_triple_intermediates = {
    {1, 2, 3, 4, 5, 6, 7, 6, 6, 4, 4, 2, 0, -3, -2},
    {1, 2, 3, 4, 5, 6, 7, 8, 7, 7, 5, 5, 3, 1, -2, -2},
    {1, 2, 3, 4, 5, 6, 7, 8, 9, 8, 8, 6, 6, 4, 2, -1, -1},
    {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 9, 9, 7, 7, 5, 3},
};

// Cube of the ideal of a line, union general complete intersections of types
// (1,2) and (4,8).
inline const std::string cubed_line_diagram = R"(
        0    1    2    3
-------------------------
 0:     1    -    -    -
 1:     -    -    -    -
 2:     -    -    -    -
 3:     -    -    -    -
 4:     -    -    -    -
 5:     -    -    -    -
 6:     -    -    -    -
 7:     -    4    3    -
 8:     -    4    7    3
 9:     -    -    -    -
10:     -    -    -    -
11:     -    5    4    -
12:     -    4    8    4
13:     -    -    4    3
-------------------------
Tot:    1   17   26   10
)";

inline const std::vector<nacm::Int> cubed_line_hvector = {1, 2, 3, 4, 5,  6,  7, 8,
                                                          5, 1, 4, 4, -1, -6, -3};
inline const nacm::BdlSequence cubed_line_diagonal_steps{
    {{11, 1}, {12, 1}, {13, 1}, {19, 2}, {21, 2}, {23, 2}}};
inline const std::vector<nacm::Int> cubed_line_staircase_degrees = {11, 12, 13, 18, 19,
                                                                    20, 22, 23, 24};
// Height-1 expansion of the diagonal steps rewritten to its normal form, one
// row of step degrees per adjacent swap.
inline const std::vector<std::vector<nacm::Int>> cubed_line_swap_rows = {
    {11, 12, 13, 19, 19, 21, 21, 23, 23},
    {11, 12, 13, 18, 20, 21, 21, 23, 23},
    {11, 12, 13, 18, 20, 20, 22, 23, 23},
    {11, 12, 13, 18, 19, 21, 22, 23, 23},
    {11, 12, 13, 18, 19, 21, 22, 22, 24},
    {11, 12, 13, 18, 19, 21, 21, 23, 24},
    {11, 12, 13, 18, 19, 20, 22, 23, 24},
};

// 11 general points in projective three-space.
inline const std::string eleven_points_diagram = R"(
                                    0    1    2    3
                            -------------------------
                             0:     1    -    -    -
                             1:     -    -    -    -
                             2:     -    9   12    3
                             3:     -    -    -    1
                            -------------------------
                            Tot:    1    9   12    4
)";

inline const std::string eleven_points_result_diagram = R"(
                                     0    1    2    3
                             -------------------------
                              0:     1    -    -    -
                              1:     -    -    -    -
                              2:     -    -    -    -
                              3:     -    -    -    -
                              4:     -    -    -    -
                              5:     -    -    -    -
                              6:     -    -    -    -
                              7:     -    9   12    3
                              8:     -    4    3    1
                              9:     -    -    1    -
                             -------------------------
                             Tot:    1   13   16    4
)";

inline const nacm::BdlSequence eleven_points_diagonal_steps{{{5, 1}, {6, 1}, {7, 1}, {9, 2}}};
inline const std::vector<nacm::Int> eleven_points_final_hvector = {1, 2, 3, 4, 5, 6, 7, 8};

// Four general quartics through 11 general points: defines the points but is
// not saturated.
inline const std::string four_quartics_diagram = R"(
                                      0    1    2    3    4
                              ------------------------------
                               0:     1    -    -    -    -
                               1:     -    -    -    -    -
                               2:     -    -    -    -    -
                               3:     -    4    -    -    -
                               4:     -    -    -    -    -
                               5:     -    -    -    -    -
                               6:     -    -    6    -    -
                               7:     -    -    -    -    -
                               8:     -    -    1    -    -
                               9:     -    -    3   16    9
                              ------------------------------
                              Tot:    1    4   10   16    9
)";

inline const std::string four_quartics_result_diagram = R"(
                                    0    1    2    3    4
                            ------------------------------
                             0:     1    -    -    -    -
                             1:     -    -    -    -    -
                                          ...
                            19:     -    -    -    -    -
                            20:     -    4    -    -    -
                            21:     -    -    -    -    -
                            22:     -    -    -    -    -
                            23:     -    -    6    -    -
                            24:     -    3    -    -    -
                            25:     -    -    1    -    -
                            26:     -    1    3   16    9
                            27:     -    3    7    -    -
                            ------------------------------
                            Tot:    1   11   17   16    9
)";

inline const std::vector<nacm::Int> four_quartics_final_hvector = {
    1,  2,  3,  4,  5,  6,  7,  8,  9,  10, 11, 12, 13, 14, 15,
    16, 17, 18, 19, 20, 21, 18, 15, 12, 9,  9,  9,  9,  9};

inline nacm::BettiTable table(const std::string& diagram) {
  return nacm::parse_betti_text(diagram);
}

inline nacm::HVector hv(const std::vector<nacm::Int>& values) { return nacm::HVector(values); }

}  // namespace fixtures
