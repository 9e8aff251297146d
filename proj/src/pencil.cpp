#include "linepencils/pencil.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <set>

#include "linepencils/fourier_motzkin.hpp"
#include "linepencils/lattice.hpp"
#include "linepencils/linalg.hpp"
#include "linepencils/os_algebra.hpp"

namespace linepencils {

Int CombinatorialPencil::weight_of(int line) const {
  auto it = std::lower_bound(support.begin(), support.end(), line);
  assert(it != support.end() && *it == line);
  return weights[it - support.begin()];
}

Int CombinatorialPencil::fiber_sum(int fiber_index) const {
  Int s = 0;
  for (int l : fibers[fiber_index]) s += weight_of(l);
  return s;
}

bool CombinatorialPencil::operator<(const CombinatorialPencil& o) const {
  if (k() != o.k()) return k() < o.k();
  if (point_type != o.point_type) return point_type && !o.point_type;
  if (support != o.support) return support < o.support;
  return class_matrix < o.class_matrix;
}

namespace {

// induced points of a support: stored restrictions with >= 2 lines plus
// implicit doubles between support lines
std::vector<LineSet> induced_points(const LineCombinatorics& c, const LineSet& support) {
  std::vector<LineSet> out;
  std::vector<bool> in(c.n + 1, false);
  for (int l : support) in[l] = true;
  for (const LineSet& p : c.points) {
    LineSet q;
    for (int l : p)
      if (in[l]) q.push_back(l);
    if (q.size() >= 2) out.push_back(q);
  }
  for (size_t a = 0; a < support.size(); ++a)
    for (size_t b = a + 1; b < support.size(); ++b)
      if (c.pair_pt[support[a]][support[b]] < 0) out.push_back({support[a], support[b]});
  return out;
}

LineSet induced_point_of(const LineCombinatorics& c, const std::vector<bool>& in, int i, int j) {
  int idx = c.pair_pt[i][j];
  if (idx < 0) return {std::min(i, j), std::max(i, j)};
  LineSet q;
  for (int l : c.points[idx])
    if (in[l]) q.push_back(l);
  return q;
}

std::vector<LineSet> graph_components(const LineCombinatorics& c, const LineSet& support,
                                      const std::set<LineSet>& chi_set) {
  std::vector<bool> in(c.n + 1, false);
  for (int l : support) in[l] = true;
  const int m = static_cast<int>(support.size());
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      LineSet pt = induced_point_of(c, in, support[a], support[b]);
      if (chi_set.count(pt)) continue;  // meet at a base point: no edge
      parent[find(a)] = find(b);
    }
  std::map<int, LineSet> comps;
  for (int a = 0; a < m; ++a) comps[find(a)].push_back(support[a]);
  std::vector<LineSet> fibers;
  for (auto& [root, lines] : comps) fibers.push_back(lines);
  std::sort(fibers.begin(), fibers.end(),
            [](const LineSet& x, const LineSet& y) { return x.front() < y.front(); });
  return fibers;
}

IntMat canonical_class_matrix(const IntMat& raw) { return saturated_row_basis(raw); }

}  // namespace

std::vector<LineSet> chi_of(const LineCombinatorics& c, const IntMat& m) {
  assert(m.cols() == c.n);
  LineSet support;
  for (int j = 0; j < c.n; ++j) {
    bool nz = false;
    for (int r = 0; r < m.rows(); ++r)
      if (m(r, j) != 0) nz = true;
    if (nz) support.push_back(j + 1);
  }
  std::vector<LineSet> out;
  for (const LineSet& p : induced_points(c, support)) {
    bool zero = true;
    for (int r = 0; r < m.rows() && zero; ++r) {
      Int s = 0;
      for (int l : p) s += m(r, l - 1);
      if (s != 0) zero = false;
    }
    if (zero) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

QDecomposition build_Q(const LineCombinatorics& c, const LineSet& support,
                       const std::vector<LineSet>& chi) {
  if (chi.empty()) throw Error(ErrorCode::EmptyChi, "chi must be nonempty");
  QDecomposition qd;
  qd.support = support;
  std::sort(qd.support.begin(), qd.support.end());
  qd.chi = chi;
  std::sort(qd.chi.begin(), qd.chi.end());
  const int m = static_cast<int>(qd.support.size());
  const int np = static_cast<int>(qd.chi.size());
  for (const LineSet& p : qd.chi)
    if (p.size() < 2) throw Error(ErrorCode::EmptyChi, "base point with fewer than 2 lines");

  std::vector<int> pos(c.n + 1, -1);
  for (int a = 0; a < m; ++a) pos[qd.support[a]] = a;
  qd.j_incidence = IntMat(np, m);
  for (int r = 0; r < np; ++r)
    for (int l : qd.chi[r]) {
      assert(pos[l] >= 0);
      qd.j_incidence(r, pos[l]) = 1;
    }
  IntMat jt = qd.j_incidence.transposed();
  qd.q = mat_mul(jt, qd.j_incidence);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) qd.q(a, b) -= 1;
  for (int a = 0; a < m; ++a)
    if (qd.q(a, a) < 1)
      throw Error(ErrorCode::QDiagonalZero,
                  "line " + std::to_string(qd.support[a]) + " lies on fewer than 2 base points");

  std::set<LineSet> chi_set(qd.chi.begin(), qd.chi.end());
  qd.fibers = graph_components(c, qd.support, chi_set);
  for (const LineSet& f : qd.fibers) {
    const int fm = static_cast<int>(f.size());
    IntMat block(fm, fm);
    for (int a = 0; a < fm; ++a)
      for (int b = 0; b < fm; ++b) block(a, b) = qd.q(pos[f[a]], pos[f[b]]);
    qd.blocks.push_back(block);
    qd.block_types.push_back(vinberg_classify(block));
  }
  return qd;
}

IntMat pencil_matrix_raw(const LineCombinatorics& c, const CombinatorialPencil& p) {
  const int k = p.k();
  IntMat m(k - 1, c.n);
  for (int t = 0; t < k; ++t) {
    for (int l : p.fibers[t]) {
      Int w = p.weight_of(l);
      if (t < k - 1)
        m(t, l - 1) = w;
      else
        for (int r = 0; r < k - 1; ++r) m(r, l - 1) = -w;
    }
  }
  return m;
}

IntMat admissible_from_pencil(const LineCombinatorics& c, const CombinatorialPencil& p) {
  return canonical_class_matrix(pencil_matrix_raw(c, p));
}

std::optional<CombinatorialPencil> pencil_for_partition(const LineCombinatorics& c,
                                                        const LineSet& support,
                                                        const std::vector<LineSet>& chi,
                                                        const std::vector<LineSet>& fibers,
                                                        int max_fibers) {
  const int k = static_cast<int>(fibers.size());
  if (k < 3 || (max_fibers > 0 && k > max_fibers)) return std::nullopt;
  const int m = static_cast<int>(support.size());
  std::vector<int> pos(c.n + 1, -1);
  for (int a = 0; a < m; ++a) pos[support[a]] = a;
  std::vector<int> fiber_of(c.n + 1, -1);
  for (int t = 0; t < k; ++t)
    for (int l : fibers[t]) fiber_of[l] = t;

  // every base point must meet every fiber
  for (const LineSet& p : chi) {
    uint32_t seen = 0;
    for (int l : p) seen |= 1u << fiber_of[l];
    if (seen != (1u << k) - 1) return std::nullopt;
  }

  // equal weighted sums across fibers at every base point
  RatMat sys(static_cast<int>(chi.size()) * (k - 1), m);
  int row = 0;
  for (const LineSet& p : chi) {
    for (int t = 1; t < k; ++t) {
      for (int l : p) {
        if (fiber_of[l] == 0) sys(row, pos[l]) += 1;
        if (fiber_of[l] == t) sys(row, pos[l]) -= 1;
      }
      ++row;
    }
  }
  auto w = positive_kernel_point(sys);
  if (!w) return std::nullopt;
  // a fixed partition with base points carries one weight ray; more freedom
  // would mean a continuum of classes, which the correspondence rules out
  if (kernel_basis(sys).size() != 1) return std::nullopt;

  CombinatorialPencil out;
  out.support = support;
  out.fibers = fibers;
  out.weights = *w;
  out.base_points = chi;
  std::sort(out.base_points.begin(), out.base_points.end());
  out.point_type = false;
  out.class_matrix = admissible_from_pencil(c, out);
  return out;
}

CombinatorialPencil point_type_pencil(const LineCombinatorics& c, int point_index) {
  const LineSet& p = c.points[point_index];
  CombinatorialPencil out;
  out.support = p;
  for (int l : p) out.fibers.push_back({l});
  out.weights.assign(p.size(), Int(1));
  out.base_points = {p};
  out.point_type = true;
  out.class_matrix = admissible_from_pencil(c, out);
  return out;
}

CombinatorialPencil pencil_from_admissible(const LineCombinatorics& c, const IntMat& m) {
  if (!is_admissible(c, m)) throw Error(ErrorCode::NotAdmissible, "matrix is not admissible");
  LineSet support;
  for (int j = 0; j < c.n; ++j) {
    bool nz = false;
    for (int r = 0; r < m.rows(); ++r)
      if (m(r, j) != 0) nz = true;
    if (nz) support.push_back(j + 1);
  }
  std::vector<LineSet> chi = chi_of(c, m);
  if (chi.empty())
    throw Error(ErrorCode::NotAdmissible, "admissible matrix with no base point");

  if (chi.size() == 1) {
    // single base point: the subcombinatorics is of point type
    const LineSet& p = chi.front();
    if (p != support)
      throw Error(ErrorCode::NotAdmissible, "single base point must carry the whole support");
    int idx = c.pair_pt[p[0]][p[1]];
    if (idx >= 0 && c.points[idx] == p) return point_type_pencil(c, idx);
    throw Error(ErrorCode::NotAdmissible, "point-type support is not a stored point");
  }

  std::set<LineSet> chi_set(chi.begin(), chi.end());
  std::vector<LineSet> fibers = graph_components(c, support, chi_set);

  // per-fiber directions exist and their weights share one sign
  for (const LineSet& f : fibers) {
    IntVec base;
    std::vector<Int> ws;
    for (int l : f) {
      IntVec col(m.rows());
      for (int r = 0; r < m.rows(); ++r) col[r] = m(r, l - 1);
      if (base.empty()) base = primitive(col, true);
      // col = w * base for an integer w
      Int w = 0;
      for (int r = 0; r < m.rows(); ++r)
        if (base[r] != 0) {
          w = col[r] / base[r];
          break;
        }
      for (int r = 0; r < m.rows(); ++r)
        if (col[r] != w * base[r])
          throw Error(ErrorCode::NotAdmissible, "columns in one fiber are not proportional");
      ws.push_back(w);
    }
    bool pos_sign = ws.front() > 0;
    for (const Int& w : ws)
      if ((w > 0) != pos_sign || w == 0)
        throw Error(ErrorCode::NotAdmissible, "fiber weights with mixed signs");
  }

  auto out = pencil_for_partition(c, support, chi, fibers, /*max_fibers=*/0);
  if (!out)
    throw Error(ErrorCode::NotAdmissible, "no positive weight ray for the fiber partition");
  return *out;
}

bool pencil_valid(const LineCombinatorics& c, const CombinatorialPencil& p) {
  std::vector<int> fiber_of(c.n + 1, -1);
  for (size_t t = 0; t < p.fibers.size(); ++t)
    for (int l : p.fibers[t]) fiber_of[l] = static_cast<int>(t);
  for (const Int& w : p.weights)
    if (w <= 0) return false;
  std::set<LineSet> base(p.base_points.begin(), p.base_points.end());
  for (const LineSet& q : induced_points(c, p.support)) {
    std::set<int> fs;
    for (int l : q) fs.insert(fiber_of[l]);
    if (fs.size() == 1) {
      if (base.count(q)) return false;  // a point inside one fiber cannot be a base point
      continue;
    }
    if (fs.size() != p.fibers.size()) return false;
    if (!base.count(q)) return false;
    Int first_sum = -1;
    for (size_t t = 0; t < p.fibers.size(); ++t) {
      Int s = 0;
      for (int l : q)
        if (fiber_of[l] == static_cast<int>(t)) s += p.weight_of(l);
      if (t == 0)
        first_sum = s;
      else if (s != first_sum)
        return false;
    }
  }
  return true;
}

}  // namespace linepencils
