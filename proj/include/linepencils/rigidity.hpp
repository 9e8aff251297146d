#pragma once

// Homological rigidity: which automorphisms of H preserve the relation
// module R, which permutations of the admissible classes they can induce,
// and the linear constraint spaces a candidate permutation imposes on the
// matrix of the automorphism.
//
// Candidate automorphisms are (n-1) x (n-1) integer matrices in the basis
// ebar_1..ebar_{n-1} (e_n eliminated).  Formulas that need all n generator
// columns use the canonical lift with zero last row.

#include <optional>
#include <string>
#include <vector>

#include "linepencils/classes.hpp"

namespace linepencils {

// canonical n x n lift of a reduced matrix: column n = -(sum of columns),
// last row zero; every lift differs by multiples of (1,..,1) per column and
// the membership determinants below do not see that difference
IntMat lift_to_generators(const LineCombinatorics& c, const IntMat& reduced);

// reduced matrix of the H-automorphism induced by a line permutation
IntMat perm_matrix_reduced(const LineCombinatorics& c, const Perm& g);

// the squared map preserves R in both directions (checked for A and A^-1
// since R need not be saturated).  Implemented through the quotient
// coefficients: for every point p, every line i of p and every concurrent
// triple (b,c,d) with b first, the 3x3 determinant with rows
// (col_i, sum of columns over p, 1) at b, c, d must vanish.
// Throws NotUnimodular unless |det A| = 1.
bool is_aut1(const LineCombinatorics& c, const IntMat& a);

// independent route used as a cross check: image of every generator of R
// must be an integer lattice member of R (HNF solve), again for both A and
// A^-1
bool aut1_lattice_check(const LineCombinatorics& c, const IntMat& a);

// permutation of the classes induced by composition with the automorphism;
// pre: is_aut1.  ClassNotPreserved signals an implementation bug.
std::vector<int> induced_class_permutation(const LineCombinatorics& c, const IntMat& a,
                                           const std::vector<AdmissibleClass>& classes);

// same permutation obtained directly from a line relabeling
std::vector<int> class_permutation_of_line_perm(const LineCombinatorics& c, const Perm& g,
                                                const std::vector<AdmissibleClass>& classes);

// all permutations of the classes that preserve k per class, the triangle
// relation of the census and per-class triangle counts; backtracking with
// count-based pruning
std::vector<std::vector<int>> triangle_preserving_permutations(
    const TriangleCensus& census, const std::vector<AdmissibleClass>& classes,
    long long node_bound = 50'000'000);

// solution space of: rowspace(M_x) * A inside rowspace(M_{sigma(x)}) for
// every class x; basis vectors are primitive integer matrices
struct ConstraintSpace {
  std::vector<IntMat> basis;
  int dim() const { return static_cast<int>(basis.size()); }
};
ConstraintSpace constraint_space(const LineCombinatorics& c, const std::vector<int>& sigma,
                                 const std::vector<AdmissibleClass>& classes);

enum class RigidityVerdict { Rigid, NotRigid, Inconclusive };

struct RigidityReport {
  RigidityVerdict verdict = RigidityVerdict::Inconclusive;
  std::optional<IntMat> witness;  // reduced matrix; passes is_aut1, not +-(line perm)
  int class_count = 0;
  int aut_order = 0;
  int candidate_count = 0;  // triangle-preserving permutations
  int orphan_count = 0;     // candidates not induced by line permutations
  int id_space_dim = -1;
  bool id_space_monomial = false;
  std::vector<IntMat> id_survivors;  // unimodular is_aut1 members of the id space
  struct Orphan {
    std::vector<int> sigma;
    int space_dim;
  };
  std::vector<Orphan> inconclusive;
  std::vector<std::string> chain;  // certificate narrative, one step per line
};

struct RigidityOptions {
  EnumerateOptions enumerate;
  long long node_bound = 50'000'000;
};

RigidityReport rigidity_check(const LineCombinatorics& c, const RigidityOptions& opts = {});

}  // namespace linepencils
