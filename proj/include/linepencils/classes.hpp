#pragma once

// The census layer over the set of maximal admissible classes: the
// upsilon function (codimension of intersected kernels), triangles, the
// P_{i,j} subsets, and the alignment relation recovered from triangles.

#include <array>
#include <map>
#include <vector>

#include "linepencils/enumerate.hpp"

namespace linepencils {

struct AdmissibleClass {
  enum class Kind { PointType, PencilType };
  IntMat matrix;  // canonical saturated row HNF, (k-1) x n
  int k = 0;
  Kind kind = Kind::PencilType;
  int point_index = -1;  // stored point index for point type
  CombinatorialPencil pencil;
};

std::vector<AdmissibleClass> classes_from_pencils(const LineCombinatorics& c,
                                                  const std::vector<CombinatorialPencil>& pencils);

// codim of the intersection of the kernels inside H (rank n-1); set
// semantics, duplicate indices allowed; empty sets are rejected
int upsilon(const std::vector<AdmissibleClass>& classes, const std::vector<int>& subset);

bool is_triangle(const std::vector<AdmissibleClass>& classes, int a, int b, int c);

struct TriangleCensus {
  std::vector<std::array<int, 3>> triangles;  // class indices, ascending
  std::vector<int> count_per_class;           // over all classes (0 outside scope)
};

// exhaustive over 3-subsets of maximal 3-classes; include_higher_k widens
// to every class
TriangleCensus triangle_census(const std::vector<AdmissibleClass>& classes,
                               bool include_higher_k = false);
TriangleCensus triangle_census_serial(const std::vector<AdmissibleClass>& classes,
                                      bool include_higher_k = false);

// P_{i,j}: subsets of the classes of size i with upsilon j (i <= 3 here)
std::map<int, std::vector<std::vector<int>>> upsilon_census(
    const std::vector<AdmissibleClass>& classes, int subset_size);

// alignment of three point-type classes via the four-point triangle
// criterion: some fourth point class forms a triangle with every pair, and
// the three do not form a triangle themselves
bool aligned(const std::vector<AdmissibleClass>& classes, int a, int b, int c);

// all aligned triples among the point-type classes
std::vector<std::array<int, 3>> collinearity_from_triangles(
    const std::vector<AdmissibleClass>& classes);

}  // namespace linepencils
