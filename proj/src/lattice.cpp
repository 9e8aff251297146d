#include "linepencils/lattice.hpp"

#include <algorithm>
#include <cassert>

namespace linepencils {

namespace {

// in-place row HNF on a; optional transform matrix u kept in lockstep.
// Returns the number of nonzero (pivot) rows.
int hnf_in_place(IntMat& a, IntMat* u) {
  const int rows = a.rows(), cols = a.cols();
  auto swap_rows = [&](int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols; ++c) std::swap(a(i, c), a(j, c));
    if (u)
      for (int c = 0; c < u->cols(); ++c) std::swap((*u)(i, c), (*u)(j, c));
  };
  auto addmul_row = [&](int dst, int src, const Int& f) {
    if (f == 0) return;
    for (int c = 0; c < cols; ++c) a(dst, c) += f * a(src, c);
    if (u)
      for (int c = 0; c < u->cols(); ++c) (*u)(dst, c) += f * (*u)(src, c);
  };
  auto negate_row = [&](int i) {
    for (int c = 0; c < cols; ++c) a(i, c) = -a(i, c);
    if (u)
      for (int c = 0; c < u->cols(); ++c) (*u)(i, c) = -(*u)(i, c);
  };

  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    // Euclidean reduction of column c among rows r..rows-1
    while (true) {
      int best = -1;
      for (int i = r; i < rows; ++i) {
        if (a(i, c) == 0) continue;
        if (best < 0 || cmp(abs(a(i, c)), abs(a(best, c))) < 0) best = i;
      }
      if (best < 0) break;
      swap_rows(r, best);
      bool done = true;
      for (int i = r + 1; i < rows; ++i) {
        if (a(i, c) == 0) continue;
        Int q = a(i, c) / a(r, c);  // truncated division is fine for Euclid
        addmul_row(i, r, -q);
        if (a(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (a(r, c) == 0) continue;
    if (a(r, c) < 0) negate_row(r);
    // reduce entries above the pivot into [0, pivot)
    for (int i = 0; i < r; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), a(i, c).get_mpz_t(), a(r, c).get_mpz_t());
      addmul_row(i, r, -q);
    }
    ++r;
  }
  return r;
}

}  // namespace

IntMat hnf(const IntMat& m) {
  IntMat a = m;
  int r = hnf_in_place(a, nullptr);
  IntMat out(r, m.cols());
  for (int i = 0; i < r; ++i)
    for (int c = 0; c < m.cols(); ++c) out(i, c) = a(i, c);
  return out;
}

HnfTransform hnf_with_left_kernel(const IntMat& m) {
  IntMat a = m;
  IntMat u = IntMat::identity(m.rows());
  int r = hnf_in_place(a, &u);
  HnfTransform out;
  out.h = IntMat(r, m.cols());
  for (int i = 0; i < r; ++i)
    for (int c = 0; c < m.cols(); ++c) out.h(i, c) = a(i, c);
  out.lkernel = IntMat(m.rows() - r, m.rows());
  for (int i = r; i < m.rows(); ++i)
    for (int c = 0; c < m.rows(); ++c) out.lkernel(i - r, c) = u(i, c);
  return out;
}

IntMat int_kernel(const IntMat& m) {
  // {v : Mv = 0} = left kernel of M^T
  return hnf(hnf_with_left_kernel(m.transposed()).lkernel);
}

std::vector<Int> smith_invariants(const IntMat& m) {
  IntMat a = m;
  const int rows = a.rows(), cols = a.cols();
  const int t_max = std::min(rows, cols);
  std::vector<Int> inv;
  for (int t = 0; t < t_max; ++t) {
    // find a nonzero entry in the remaining block
    int pr = -1, pc = -1;
    for (int i = t; i < rows && pr < 0; ++i)
      for (int j = t; j < cols; ++j)
        if (a(i, j) != 0) {
          pr = i;
          pc = j;
          break;
        }
    if (pr < 0) break;
    for (int c = 0; c < cols; ++c) std::swap(a(t, c), a(pr, c));
    for (int r = 0; r < rows; ++r) std::swap(a(r, t), a(r, pc));
    while (true) {
      bool clean = true;
      // clear column t below the pivot, improving the pivot by Euclid
      for (int i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        if (a(i, t) % a(t, t) != 0) {
          // swap in the smaller remainder-producing row via gcd step
          Int q = a(i, t) / a(t, t);
          for (int c = t; c < cols; ++c) a(i, c) -= q * a(t, c);
          for (int c = t; c < cols; ++c) std::swap(a(i, c), a(t, c));
          clean = false;
        } else {
          Int q = a(i, t) / a(t, t);
          for (int c = t; c < cols; ++c) a(i, c) -= q * a(t, c);
        }
      }
      for (int j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        if (a(t, j) % a(t, t) != 0) {
          Int q = a(t, j) / a(t, t);
          for (int r = t; r < rows; ++r) a(r, j) -= q * a(r, t);
          for (int r = t; r < rows; ++r) std::swap(a(r, j), a(r, t));
          clean = false;
        } else {
          Int q = a(t, j) / a(t, t);
          for (int r = t; r < rows; ++r) a(r, j) -= q * a(r, t);
        }
      }
      if (!clean) continue;
      // divisibility: pivot must divide every entry of the trailing block
      bool divides = true;
      for (int i = t + 1; i < rows && divides; ++i)
        for (int j = t + 1; j < cols; ++j)
          if (a(i, j) % a(t, t) != 0) {
            for (int c = t; c < cols; ++c) a(t, c) += a(i, c);
            divides = false;
            break;
          }
      if (divides) break;
    }
    Int d = abs(a(t, t));
    inv.push_back(d);
  }
  return inv;
}

Lattice make_lattice(const IntMat& rows) {
  Lattice l;
  l.basis = hnf(rows);
  l.saturated = false;
  return l;
}

Lattice saturate(const Lattice& l) {
  Lattice out;
  out.basis = saturated_row_basis(l.basis);
  out.saturated = true;
  return out;
}

IntMat saturated_row_basis(const IntMat& m) {
  if (m.rows() == 0) return IntMat(0, m.cols());
  // rowspan(m)^perp is the right kernel; the double kernel is the saturation
  IntMat k = int_kernel(m);
  if (k.rows() == 0) return hnf(IntMat::identity(m.cols()));
  return int_kernel(k);
}

std::optional<IntVec> hnf_solve_left(const IntMat& h, const IntVec& v) {
  assert(static_cast<int>(v.size()) == h.cols());
  IntVec rem = v;
  IntVec x(h.rows());
  for (int i = 0; i < h.rows(); ++i) {
    int p = -1;
    for (int c = 0; c < h.cols(); ++c)
      if (h(i, c) != 0) {
        p = c;
        break;
      }
    assert(p >= 0);
    if (rem[p] % h(i, p) != 0) return std::nullopt;
    Int q = rem[p] / h(i, p);
    x[i] = q;
    if (q != 0)
      for (int c = 0; c < h.cols(); ++c) rem[c] -= q * h(i, c);
  }
  for (const Int& r : rem)
    if (r != 0) return std::nullopt;
  return x;
}

bool lattice_contains(const IntMat& h, const IntVec& v) { return hnf_solve_left(h, v).has_value(); }

}  // namespace linepencils
