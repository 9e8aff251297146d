#pragma once

// Degree 1 and 2 of the Orlik-Solomon algebra over Q, the relation module
// R inside H^H, and the admissibility / resonance tests built on them.
//
// Conventions, fixed once for the whole project:
//  - the "first line" of a point is its minimal line index;
//  - degree-2 coordinates live on the pairs (i,j) where l_i is first at
//    l_i ^ l_j ("basis pairs");
//  - H^H coordinates eliminate e_n (e_n = -e_1-...-e_{n-1}) and run over
//    the pairs ebar_i ^ ebar_j with 1 <= i < j <= n-1.

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "linepencils/combinatorics.hpp"
#include "linepencils/matrix.hpp"

namespace linepencils {

// degree-1 element: coordinates in the generators x_1..x_n, sum zero
using A1Element = RatVec;

struct OS2Element {
  std::map<std::pair<int, int>, Rat> coeff;  // keyed by basis pair

  bool is_zero() const {
    for (const auto& [k, v] : coeff)
      if (v != 0) return false;
    return true;
  }
  Rat at(int i, int j) const {
    auto it = coeff.find({i, j});
    return it == coeff.end() ? Rat(0) : it->second;
  }
  void add(int i, int j, const Rat& v) {
    if (v == 0) return;
    auto& slot = coeff[{i, j}];
    slot += v;
    if (slot == 0) coeff.erase({i, j});
  }
  OS2Element operator-() const {
    OS2Element out;
    for (const auto& [k, v] : coeff) out.coeff[k] = -v;
    return out;
  }
  OS2Element operator-(const OS2Element& o) const {
    OS2Element out = *this;
    for (const auto& [k, v] : o.coeff) out.add(k.first, k.second, -v);
    return out;
  }
  bool operator==(const OS2Element& o) const { return (*this - o).is_zero(); }
};

// canonical degree-2 coordinate pairs: (first(p), j) for every point p and
// every other line j of p; count is sum over points of (|p| - 1)
std::vector<std::pair<int, int>> os2_basis_pairs(const LineCombinatorics& c);

// expression of x_i ^ x_j in the canonical pairs (sign handled for i > j)
OS2Element reduce_wedge(const LineCombinatorics& c, int i, int j);

// product of two degree-1 elements; the coefficient on the pair (f, j) of a
// point p is det [[a_j, sum_{k in p} a_k], [b_j, sum_{k in p} b_k]]
OS2Element wedge(const LineCombinatorics& c, const A1Element& a, const A1Element& b);

// epimorphism test: all Smith invariant factors 1 and full row rank
bool is_epimorphism(const IntMat& m);

// rows pairwise orthogonal in degree 2 (the quadratic admissibility
// condition, expressed through `wedge`)
bool rows_orthogonal(const LineCombinatorics& c, const IntMat& m);

// k-admissibility of a (k-1) x n matrix: zero row sums (else RowSumNonZero),
// epimorphism onto Z^{k-1}, rows pairwise orthogonal
bool is_admissible(const LineCombinatorics& c, const IntMat& m);

// independent route: evaluate the squared map on every generator of R
// (column j against the column sum over p, all 2x2 minors must vanish)
bool admissible_via_relations(const LineCombinatorics& c, const IntMat& m);

// some b outside span(a) with a ^ b = 0, found by solving the linear system
// wedge(a, .) = 0; nullopt when the solution space is just span(a)
std::optional<IntVec> resonance_membership(const LineCombinatorics& c, const A1Element& a);

// e_i and point sums in the ebar coordinates (length n-1)
IntVec ebar(const LineCombinatorics& c, int line);
// wedge of two ebar-coordinate vectors, flattened over pairs i<j
IntVec wedge_coords(const IntVec& u, const IntVec& v);
int pair_index(int n, int i, int j);

// generators of R in H^H coordinates: per point, e_j ^ (sum over p) for
// every j in p except the first (that one is a signed sum of the others)
std::vector<IntVec> relation_generators(const LineCombinatorics& c);

// pairs (i,j), i<j, with neither line first at their intersection point
std::vector<std::pair<int, int>> quotient_basis(const LineCombinatorics& c);

// HNF basis of the relation lattice R
IntMat relation_lattice(const LineCombinatorics& c);

}  // namespace linepencils
