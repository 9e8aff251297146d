#pragma once

// Enumeration of all maximal admissible classes of a line combinatorics as
// combinatorial pencils.
//
// Search space for non-point pencils: every candidate is a pair
// (support S, base set chi) with chi a set of induced points of S of
// multiplicity >= 3.  Structural facts that prune hard and keep the search
// complete at desk scale:
//   - every support line lies on >= 2 base points,
//   - base points pairwise share at most one line, which forces |chi| >= 4
//     and |S| >= 6.
// The fiber partition is the set of components of the graph joining lines
// that meet outside chi; the weights solve the equal-sum system at the base
// points.  Point-type pencils (single base point) come straight from the
// stored point list.
//
// The outer support loop is embarrassingly parallel; the OpenMP driver and
// the serial reference produce byte-identical, canonically sorted output.

#include <vector>

#include "linepencils/pencil.hpp"

namespace linepencils {

struct EnumerateOptions {
  int max_fibers = 8;
  bool include_nonmaximal = false;
  int max_lines = 16;  // SearchBoundExceeded above this
};

std::vector<CombinatorialPencil> enumerate_pencils(const LineCombinatorics& c,
                                                   const EnumerateOptions& opts = {});

// serial reference implementation, kept for testing the parallel driver
std::vector<CombinatorialPencil> enumerate_pencils_serial(const LineCombinatorics& c,
                                                          const EnumerateOptions& opts = {});

// independent brute force over all assignments of lines to three fibers or
// exclusion (<= 4^n); checks the pencil definition per assignment, keeps
// only partitions that match the base-point graph (and, for a single base
// point, only the full point); test oracle, n <= 12
std::vector<CombinatorialPencil> oracle_enumerate_3pencils(const LineCombinatorics& c);

// discard classes whose row space is strictly contained in another's
std::vector<CombinatorialPencil> maximality_filter(std::vector<CombinatorialPencil> pencils);

}  // namespace linepencils
