#pragma once

// Exact Fourier-Motzkin elimination over Q for small systems of linear
// inequalities, with sample-point extraction by back substitution.
// Deliberately simple: the dimensions in this project stay below ~20.

#include <optional>
#include <vector>

#include "linepencils/matrix.hpp"

namespace linepencils {

// a . x + c  (>  or  >=)  0
struct LinConstraint {
  RatVec a;
  Rat c;
  bool strict = false;
};

struct FmSystem {
  int vars = 0;
  std::vector<LinConstraint> constraints;

  void add(const RatVec& a, const Rat& c, bool strict) { constraints.push_back({a, c, strict}); }
};

// feasibility + a witness point if feasible
std::optional<RatVec> fm_solve(const FmSystem& sys);

// strictly positive rational solution of Ax = 0, as a primitive integer
// vector, or nullopt if the open cone is empty
std::optional<IntVec> positive_kernel_point(const RatMat& a);
std::optional<IntVec> positive_kernel_point(const IntMat& a);

}  // namespace linepencils
