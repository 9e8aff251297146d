#pragma once

// Combinatorial pencils and the equivalence with admissible classes:
// the base-point set chi, the incidence matrix Q = J^T J - U with its
// block decomposition, and the conversions in both directions.

#include <vector>

#include "linepencils/combinatorics.hpp"
#include "linepencils/matrix.hpp"
#include "linepencils/vinberg.hpp"

namespace linepencils {

struct CombinatorialPencil {
  LineSet support;                   // sorted parent line indices
  std::vector<LineSet> fibers;       // partition of support, sorted by least line
  std::vector<Int> weights;          // parallel to support, positive, gcd 1
  std::vector<LineSet> base_points;  // induced point line sets, lex sorted
  bool point_type = false;
  IntMat class_matrix;               // saturated row HNF, (k-1) x n

  int k() const { return static_cast<int>(fibers.size()); }
  Int weight_of(int line) const;
  Int fiber_sum(int fiber_index) const;

  // class identity: equality of saturated row spaces
  bool operator==(const CombinatorialPencil& o) const { return class_matrix == o.class_matrix; }
  bool operator<(const CombinatorialPencil& o) const;
};

// points of the subcombinatorics on the nonzero columns whose column sum
// vanishes; returned as induced line sets (stored points and implicit
// doubles alike)
std::vector<LineSet> chi_of(const LineCombinatorics& c, const IntMat& m);

struct QDecomposition {
  LineSet support;
  std::vector<LineSet> chi;
  IntMat j_incidence;                         // |chi| x |support|
  IntMat q;                                   // J^T J - U
  std::vector<LineSet> fibers;                // graph components, parent numbering
  std::vector<IntMat> blocks;                 // per fiber
  std::vector<VinbergCertificate> block_types;
};

// partition = components of the graph joining lines that meet outside chi.
// Throws EmptyChi, and QDiagonalZero when some diagonal entry drops below 1
// (the degenerate single-point case handled upstream as point type).
QDecomposition build_Q(const LineCombinatorics& c, const LineSet& support,
                       const std::vector<LineSet>& chi);

// canonical (k-1) x n matrix of a pencil: fiber t maps to the t-th standard
// basis vector (last fiber to minus their sum) scaled by the line weights;
// returned as the saturated row HNF so it always passes is_admissible
IntMat admissible_from_pencil(const LineCombinatorics& c, const CombinatorialPencil& p);
// the raw construction matrix before canonicalization
IntMat pencil_matrix_raw(const LineCombinatorics& c, const CombinatorialPencil& p);

CombinatorialPencil pencil_from_admissible(const LineCombinatorics& c, const IntMat& m);

// pencil for (support, chi, partition) if the definition can be satisfied:
// checks fiber count bounds, that every base point meets every fiber, and
// solves the equal-weight-sum system for strictly positive weights.
// Used by the enumerator and by pencil_from_admissible.
std::optional<CombinatorialPencil> pencil_for_partition(const LineCombinatorics& c,
                                                        const LineSet& support,
                                                        const std::vector<LineSet>& chi,
                                                        const std::vector<LineSet>& fibers,
                                                        int max_fibers);

CombinatorialPencil point_type_pencil(const LineCombinatorics& c, int point_index);

// full Def check of an already-built pencil (every induced point of the
// support either inside one fiber or meeting all fibers with equal sums)
bool pencil_valid(const LineCombinatorics& c, const CombinatorialPencil& p);

}  // namespace linepencils
