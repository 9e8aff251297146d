#pragma once

// Line combinatorics: n lines, a set of stored multiple points (>= 3 lines
// each), and implicit double points for every pair of lines not covered by
// a stored point.  Lines are 1-based; stored points are kept sorted and in
// lexicographic order so serialization and hashing are canonical.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "linepencils/errors.hpp"

namespace linepencils {

using LineSet = std::vector<int>;  // sorted, 1-based
using Perm = std::vector<int>;     // perm[i-1] = image of line i

struct LineCombinatorics {
  int n = 0;
  std::vector<LineSet> points;  // each sorted, the list lex-sorted

  // derived on validation
  std::vector<uint32_t> point_mask;       // bit (i-1) set iff line i in point
  std::vector<std::vector<int>> pair_pt;  // pair_pt[i][j] = stored point index or -1

  int stored_point_at(int i, int j) const { return pair_pt[i][j]; }
  uint32_t full_mask() const { return n >= 32 ? ~0u : ((1u << n) - 1); }
};

struct PointRef {
  enum class Kind { Stored, ImplicitDouble } kind;
  int index = -1;  // stored point index
  int i = 0, j = 0;

  bool is_stored() const { return kind == Kind::Stored; }
};

// validation: every stored point has >= 3 distinct in-range lines, no two
// stored points share two lines, n >= 1
LineCombinatorics validate(int n, std::vector<LineSet> raw_points);

PointRef point_of(const LineCombinatorics& c, int i, int j);
LineSet point_lines(const LineCombinatorics& c, const PointRef& p);

// all points: stored ones first, then implicit doubles in lex order
std::vector<LineSet> all_points(const LineCombinatorics& c);

struct Subcombinatorics {
  const LineCombinatorics* parent = nullptr;
  LineSet support;              // parent line indices, sorted
  LineCombinatorics induced;    // re-indexed to 1..|support|
  std::vector<int> to_parent;   // to_parent[k-1] = parent index of induced line k
};

Subcombinatorics restrict_to(const LineCombinatorics& c, const LineSet& support);

// all line permutations mapping the stored point set onto itself;
// multiplicity-profile refinement prunes the backtracking
std::vector<Perm> automorphisms(const LineCombinatorics& c);

// a single isomorphism c1 -> c2, if one exists
std::optional<Perm> find_isomorphism(const LineCombinatorics& a, const LineCombinatorics& b);

Perm compose(const Perm& f, const Perm& g);  // apply g first, then f
Perm inverse(const Perm& f);

// relabel lines by g: point {i,...} becomes {g(i),...}
LineCombinatorics relabel(const LineCombinatorics& c, const Perm& g);

}  // namespace linepencils
