#pragma once

// Integer lattice arithmetic: row Hermite normal form, Smith invariant
// factors, saturation.  The canonical form of a sublattice of Z^n (and of
// an admissible class, elsewhere) is the HNF of its row basis.

#include <optional>
#include <vector>

#include "linepencils/matrix.hpp"

namespace linepencils {

// row-style HNF with zero rows dropped: pivots positive, entries above a
// pivot reduced into [0, pivot)
IntMat hnf(const IntMat& m);

// U * m has HNF rows first and zero rows last; returns (hnf, U-part spanning
// the left kernel), i.e. rows u with u*m = 0 forming a basis of that lattice
struct HnfTransform {
  IntMat h;        // HNF, zero rows dropped
  IntMat lkernel;  // basis of {u : u*m = 0}
};
HnfTransform hnf_with_left_kernel(const IntMat& m);

// basis of the right integer kernel {v : Mv = 0}; rows of the result.
// This lattice is saturated by construction.
IntMat int_kernel(const IntMat& m);

// invariant factors d1 | d2 | ... of the Smith normal form
std::vector<Int> smith_invariants(const IntMat& m);

// integer row lattices; `saturated` is a promise tag maintained by saturate()
struct Lattice {
  IntMat basis;  // HNF rows
  bool saturated = false;

  int rank() const { return basis.rows(); }
  int ambient() const { return basis.cols(); }
  bool operator==(const Lattice& o) const { return basis == o.basis; }
};

Lattice make_lattice(const IntMat& rows);
Lattice saturate(const Lattice& l);

// saturated HNF of the row lattice of m; canonical representative of the
// rational row space among integer matrices
IntMat saturated_row_basis(const IntMat& m);

// integer membership: coefficients x with x * hnf_rows = v, if any
std::optional<IntVec> hnf_solve_left(const IntMat& hnf_rows, const IntVec& v);
bool lattice_contains(const IntMat& hnf_rows, const IntVec& v);

}  // namespace linepencils
