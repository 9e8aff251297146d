#pragma once

// Transpose duality between automorphisms of the degree-2 algebra and
// R-preserving automorphisms of H^H.  The coefficient here mirrors the
// quotient coefficients of the rigidity module with the roles of rows and
// columns exchanged; duality_check compares the two code paths.

#include <map>
#include <tuple>

#include "linepencils/rigidity.hpp"

namespace linepencils {

// key: (relation triple (b,c,d), target point index over all_points, line j)
using OsCoefficientKey = std::tuple<std::array<int, 3>, int, int>;

// for each concurrent triple (b,c,d) with b first at their common point and
// each basis pair (i, j) with i first at a point p containing j: the 3x3
// determinant with rows (sum over p of a_{k,.} at columns b,c,d),
// (a_{j,b}, a_{j,c}, a_{j,d}), (1,1,1)
std::map<OsCoefficientKey, Int> os_coefficients(const LineCombinatorics& c, const IntMat& a);

// true iff all coefficients vanish; NotUnimodular unless |det a| = 1
bool is_os_automorphism(const LineCombinatorics& c, const IntMat& a);

// asserts is_os_automorphism(c, a) == is_aut1(c, a^T) and returns the shared
// value; a disagreement is an implementation bug and throws DualityViolation
bool duality_check(const LineCombinatorics& c, const IntMat& a);

}  // namespace linepencils
