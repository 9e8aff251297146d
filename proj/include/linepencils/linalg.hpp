#pragma once

// Exact rational linear algebra: reduced row echelon form and everything
// derived from it (rank, kernels, row space comparisons).  No floating
// point anywhere; sign and rank questions are decided, not estimated.

#include <optional>
#include <vector>

#include "linepencils/matrix.hpp"

namespace linepencils {

struct Rref {
  RatMat mat;
  std::vector<int> pivot_cols;
  int rank() const { return static_cast<int>(pivot_cols.size()); }
};

Rref rref(const RatMat& m);

int rank(const RatMat& m);
int rank(const IntMat& m);

// basis of the right kernel {x : Mx = 0}, each vector integer primitive
std::vector<IntVec> kernel_basis(const RatMat& m);
std::vector<IntVec> kernel_basis(const IntMat& m);

// every row of b lies in the rational row span of a
bool rowspace_contains(const RatMat& a, const RatMat& b);
bool rowspace_contains(const IntMat& a, const IntMat& b);
bool rowspace_equal(const IntMat& a, const IntMat& b);

// codimension (in the ambient column space) of the intersection of the
// right kernels, i.e. the rank of the stacked matrix
int intersect_kernels_codim(const std::vector<IntMat>& mats, int cols);
std::vector<IntVec> intersect_kernels_basis(const std::vector<IntMat>& mats, int cols);

Int det(const IntMat& m);
Rat det(const RatMat& m);

// inverse of a matrix with |det| = 1; asserts unimodularity
IntMat unimodular_inverse(const IntMat& m);

// particular solution of xs * m = target (row-vector convention), if any
std::optional<RatVec> solve_left(const RatMat& m, const RatVec& target);

}  // namespace linepencils
