#include "linepencils/os_algebra.hpp"

#include <algorithm>
#include <cassert>

#include "linepencils/lattice.hpp"
#include "linepencils/linalg.hpp"

namespace linepencils {

std::vector<std::pair<int, int>> os2_basis_pairs(const LineCombinatorics& c) {
  std::vector<std::pair<int, int>> out;
  for (const LineSet& p : all_points(c)) {
    int f = p.front();
    for (size_t k = 1; k < p.size(); ++k) out.push_back({f, p[k]});
  }
  std::sort(out.begin(), out.end());
  return out;
}

OS2Element reduce_wedge(const LineCombinatorics& c, int i, int j) {
  assert(i != j);
  Rat sign = 1;
  if (i > j) {
    std::swap(i, j);
    sign = -1;
  }
  LineSet p = point_lines(c, point_of(c, i, j));
  int f = p.front();
  OS2Element out;
  if (f == i) {
    out.add(i, j, sign);
  } else {
    // x_i ^ x_j = (x_f ^ x_j) - (x_f ^ x_i)
    out.add(f, j, sign);
    out.add(f, i, -sign);
  }
  return out;
}

OS2Element wedge(const LineCombinatorics& c, const A1Element& a, const A1Element& b) {
  assert(static_cast<int>(a.size()) == c.n && static_cast<int>(b.size()) == c.n);
  OS2Element out;
  for (const LineSet& p : all_points(c)) {
    Rat sa = 0, sb = 0;
    for (int k : p) {
      sa += a[k - 1];
      sb += b[k - 1];
    }
    int f = p.front();
    for (size_t t = 1; t < p.size(); ++t) {
      int j = p[t];
      out.add(f, j, a[j - 1] * sb - sa * b[j - 1]);
    }
  }
  return out;
}

bool is_epimorphism(const IntMat& m) {
  std::vector<Int> inv = smith_invariants(m);
  if (static_cast<int>(inv.size()) != m.rows()) return false;  // rank deficient
  for (const Int& d : inv)
    if (d != 1) return false;
  return true;
}

bool rows_orthogonal(const LineCombinatorics& c, const IntMat& m) {
  std::vector<A1Element> rows;
  for (int r = 0; r < m.rows(); ++r) {
    A1Element v(c.n);
    for (int j = 0; j < c.n; ++j) v[j] = Rat(m(r, j));
    rows.push_back(v);
  }
  for (size_t r = 0; r < rows.size(); ++r)
    for (size_t s = r + 1; s < rows.size(); ++s)
      if (!wedge(c, rows[r], rows[s]).is_zero()) return false;
  return true;
}

static void check_row_sums(const IntMat& m) {
  for (int r = 0; r < m.rows(); ++r) {
    Int s = 0;
    for (int j = 0; j < m.cols(); ++j) s += m(r, j);
    if (s != 0)
      throw Error(ErrorCode::RowSumNonZero, "row " + std::to_string(r) + " does not sum to zero");
  }
}

bool is_admissible(const LineCombinatorics& c, const IntMat& m) {
  assert(m.cols() == c.n);
  check_row_sums(m);
  if (m.rows() < 2) return false;  // k >= 3
  if (!is_epimorphism(m)) return false;
  return rows_orthogonal(c, m);
}

bool admissible_via_relations(const LineCombinatorics& c, const IntMat& m) {
  assert(m.cols() == c.n);
  check_row_sums(m);
  if (m.rows() < 2) return false;
  if (!is_epimorphism(m)) return false;
  const int h = m.rows();
  for (const LineSet& p : all_points(c)) {
    IntVec s(h);
    for (int k : p)
      for (int r = 0; r < h; ++r) s[r] += m(r, k - 1);
    for (int j : p) {
      // image of the generator e_j ^ (sum over p): a decomposable 2-vector,
      // zero iff the two columns are proportional
      for (int r = 0; r < h; ++r)
        for (int t = r + 1; t < h; ++t)
          if (m(r, j - 1) * s[t] - m(t, j - 1) * s[r] != 0) return false;
    }
  }
  return true;
}

std::optional<IntVec> resonance_membership(const LineCombinatorics& c, const A1Element& a) {
  assert(static_cast<int>(a.size()) == c.n);
  // unknowns b_1..b_n; rows: sum(b) = 0 and one row per basis pair
  std::vector<RatVec> rows;
  {
    RatVec sum_row(c.n, Rat(1));
    rows.push_back(sum_row);
  }
  for (const LineSet& p : all_points(c)) {
    Rat sa = 0;
    for (int k : p) sa += a[k - 1];
    for (size_t t = 1; t < p.size(); ++t) {
      int j = p[t];
      // a_j * sum_{k in p} b_k - sa * b_j = 0
      RatVec row(c.n);
      for (int k : p) row[k - 1] += a[j - 1];
      row[j - 1] -= sa;
      rows.push_back(std::move(row));
    }
  }
  RatMat sys(static_cast<int>(rows.size()), c.n);
  for (size_t r = 0; r < rows.size(); ++r) sys.set_row(static_cast<int>(r), rows[r]);
  std::vector<IntVec> kb = kernel_basis(sys);
  RatMat amat(1, c.n);
  for (int j = 0; j < c.n; ++j) amat(0, j) = a[j];
  for (const IntVec& v : kb) {
    RatMat stacked(2, c.n);
    for (int j = 0; j < c.n; ++j) {
      stacked(0, j) = a[j];
      stacked(1, j) = Rat(v[j]);
    }
    if (rank(stacked) == 2) return v;
  }
  return std::nullopt;
}

IntVec ebar(const LineCombinatorics& c, int line) {
  assert(line >= 1 && line <= c.n);
  IntVec v(c.n - 1);
  if (line < c.n)
    v[line - 1] = 1;
  else
    for (int i = 0; i < c.n - 1; ++i) v[i] = -1;
  return v;
}

int pair_index(int n, int i, int j) {
  assert(1 <= i && i < j && j <= n - 1);
  // pairs (i,j) with i<j<=n-1 in lex order
  int before = 0;
  for (int a = 1; a < i; ++a) before += (n - 1) - a;
  return before + (j - i - 1);
}

IntVec wedge_coords(const IntVec& u, const IntVec& v) {
  assert(u.size() == v.size());
  const int m = static_cast<int>(u.size());
  IntVec out(m * (m - 1) / 2);
  int idx = 0;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) out[idx++] = u[i] * v[j] - u[j] * v[i];
  return out;
}

std::vector<IntVec> relation_generators(const LineCombinatorics& c) {
  std::vector<IntVec> out;
  for (const LineSet& p : all_points(c)) {
    IntVec s(c.n - 1);
    for (int k : p) {
      IntVec e = ebar(c, k);
      for (int i = 0; i < c.n - 1; ++i) s[i] += e[i];
    }
    for (size_t t = 1; t < p.size(); ++t) out.push_back(wedge_coords(ebar(c, p[t]), s));
  }
  return out;
}

std::vector<std::pair<int, int>> quotient_basis(const LineCombinatorics& c) {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= c.n; ++i)
    for (int j = i + 1; j <= c.n; ++j) {
      LineSet p = point_lines(c, point_of(c, i, j));
      if (p.front() != i) out.push_back({i, j});  // p.front() < i means neither is first
    }
  return out;
}

IntMat relation_lattice(const LineCombinatorics& c) {
  std::vector<IntVec> gens = relation_generators(c);
  const int w = (c.n - 1) * (c.n - 2) / 2;
  IntMat m(static_cast<int>(gens.size()), w);
  for (size_t r = 0; r < gens.size(); ++r) m.set_row(static_cast<int>(r), gens[r]);
  return hnf(m);
}

}  // namespace linepencils
