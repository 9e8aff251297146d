#include "linepencils/linalg.hpp"

#include <cassert>

namespace linepencils {

Rref rref(const RatMat& m) {
  Rref out;
  out.mat = m;
  RatMat& a = out.mat;
  int r = 0;
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    int piv = -1;
    for (int i = r; i < a.rows(); ++i)
      if (a(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(r, j));
    Rat inv = 1 / a(r, c);
    for (int j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      Rat f = a(i, c);
      for (int j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  return out;
}

int rank(const RatMat& m) { return rref(m).rank(); }
int rank(const IntMat& m) { return rank(to_rational(m)); }

std::vector<IntVec> kernel_basis(const RatMat& m) {
  Rref rr = rref(m);
  int n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (int c : rr.pivot_cols) is_pivot[c] = true;
  std::vector<IntVec> out;
  for (int free_c = 0; free_c < n; ++free_c) {
    if (is_pivot[free_c]) continue;
    RatVec v(n);
    v[free_c] = 1;
    for (size_t i = 0; i < rr.pivot_cols.size(); ++i) v[rr.pivot_cols[i]] = -rr.mat(static_cast<int>(i), free_c);
    out.push_back(primitive(v));
  }
  return out;
}

std::vector<IntVec> kernel_basis(const IntMat& m) { return kernel_basis(to_rational(m)); }

bool rowspace_contains(const RatMat& a, const RatMat& b) {
  if (b.empty()) return true;
  int ra = rank(a);
  return rank(vstack(a, b)) == ra;
}

bool rowspace_contains(const IntMat& a, const IntMat& b) {
  return rowspace_contains(to_rational(a), to_rational(b));
}

bool rowspace_equal(const IntMat& a, const IntMat& b) {
  return rowspace_contains(a, b) && rowspace_contains(b, a);
}

int intersect_kernels_codim(const std::vector<IntMat>& mats, int cols) {
  IntMat stack(0, cols);
  for (const IntMat& m : mats) {
    assert(m.empty() || m.cols() == cols);
    stack = vstack(stack, m);
  }
  if (stack.rows() == 0) return 0;
  return rank(stack);
}

std::vector<IntVec> intersect_kernels_basis(const std::vector<IntMat>& mats, int cols) {
  IntMat stack(0, cols);
  for (const IntMat& m : mats) stack = vstack(stack, m);
  if (stack.rows() == 0) stack = IntMat(0, cols);
  if (stack.rows() == 0) {
    std::vector<IntVec> out;
    for (int i = 0; i < cols; ++i) {
      IntVec e(cols);
      e[i] = 1;
      out.push_back(e);
    }
    return out;
  }
  return kernel_basis(stack);
}

Rat det(const RatMat& m) {
  assert(m.rows() == m.cols());
  RatMat a = m;
  int n = a.rows();
  Rat d = 1;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (a(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return Rat(0);
    if (piv != c) {
      for (int j = 0; j < n; ++j) std::swap(a(piv, j), a(c, j));
      d = -d;
    }
    d *= a(c, c);
    Rat inv = 1 / a(c, c);
    for (int i = c + 1; i < n; ++i) {
      if (a(i, c) == 0) continue;
      Rat f = a(i, c) * inv;
      for (int j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return d;
}

Int det(const IntMat& m) {
  Rat d = det(to_rational(m));
  assert(d.get_den() == 1);
  return d.get_num();
}

IntMat unimodular_inverse(const IntMat& m) {
  assert(m.rows() == m.cols());
  int n = m.rows();
  RatMat a = to_rational(m);
  RatMat aug(n, 2 * n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n + r) = 1;
  }
  Rref rr = rref(aug);
  assert(rr.rank() == n);
  RatMat inv(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) inv(r, c) = rr.mat(r, n + c);
  return to_integer(inv);
}

std::optional<RatVec> solve_left(const RatMat& m, const RatVec& target) {
  // solve x * m = target: transpose to m^T x^T = target^T
  RatMat t = m.transposed();
  assert(static_cast<int>(target.size()) == t.rows());
  RatMat aug(t.rows(), t.cols() + 1);
  for (int r = 0; r < t.rows(); ++r) {
    for (int c = 0; c < t.cols(); ++c) aug(r, c) = t(r, c);
    aug(r, t.cols()) = target[r];
  }
  Rref rr = rref(aug);
  for (int c : rr.pivot_cols)
    if (c == t.cols()) return std::nullopt;
  RatVec x(t.cols());
  for (size_t i = 0; i < rr.pivot_cols.size(); ++i) x[rr.pivot_cols[i]] = rr.mat(static_cast<int>(i), t.cols());
  return x;
}

}  // namespace linepencils
