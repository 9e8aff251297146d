#include "linepencils/vinberg.hpp"

#include <cassert>

#include "linepencils/errors.hpp"
#include "linepencils/fourier_motzkin.hpp"
#include "linepencils/linalg.hpp"

namespace linepencils {

namespace {

void check_preconditions(const RatMat& b) {
  const int n = b.rows();
  if (n != b.cols()) throw Error(ErrorCode::BadSignPattern, "block must be square");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (b(i, j) > 0) throw Error(ErrorCode::BadSignPattern, "positive off-diagonal entry");
      if ((b(i, j) == 0) != (b(j, i) == 0))
        throw Error(ErrorCode::BadSignPattern, "zero pattern not symmetric");
    }
  // indecomposable = support graph connected
  std::vector<bool> seen(n, false);
  std::vector<int> stack = {0};
  seen[0] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w = 0; w < n; ++w)
      if (!seen[w] && w != v && b(v, w) != 0) {
        seen[w] = true;
        stack.push_back(w);
      }
  }
  for (int i = 0; i < n; ++i)
    if (!seen[i]) throw Error(ErrorCode::NotIndecomposable, "block decomposes");
}

// strictly positive u with (Bu)_i sign as requested on every coordinate
std::optional<IntVec> signed_image_point(const RatMat& b, int sign) {
  const int n = b.rows();
  FmSystem sys;
  sys.vars = n;
  for (int i = 0; i < n; ++i) {
    RatVec e(n);
    e[i] = 1;
    sys.add(e, Rat(0), true);  // u_i > 0
  }
  for (int i = 0; i < n; ++i) {
    RatVec row(n);
    for (int j = 0; j < n; ++j) row[j] = sign > 0 ? b(i, j) : -b(i, j);
    sys.add(row, Rat(0), true);  // sign * (Bu)_i > 0
  }
  auto sol = fm_solve(sys);
  if (!sol) return std::nullopt;
  return primitive(*sol, true);
}

}  // namespace

VinbergCertificate vinberg_classify(const RatMat& block) {
  check_preconditions(block);
  const int n = block.rows();
  int corank = n - rank(block);
  if (corank == 1) {
    std::vector<IntVec> kb = kernel_basis(block);
    assert(kb.size() == 1);
    IntVec u = kb.front();
    bool pos = true, neg = true;
    for (const Int& x : u) {
      if (x <= 0) pos = false;
      if (x >= 0) neg = false;
    }
    if (neg)
      for (Int& x : u) x = -x;
    if (pos || neg) return {VinbergType::Aff, u};
  }
  if (corank == 0) {
    if (auto u = signed_image_point(block, +1)) return {VinbergType::Fin, *u};
  }
  if (auto u = signed_image_point(block, -1)) return {VinbergType::Ind, *u};
  // the trichotomy leaves no other case for valid inputs
  throw Error(ErrorCode::BadSignPattern, "block matches no type of the trichotomy");
}

VinbergCertificate vinberg_classify(const IntMat& block) {
  return vinberg_classify(to_rational(block));
}

bool vinberg_verify(const RatMat& block, const VinbergCertificate& cert) {
  const int n = block.rows();
  if (static_cast<int>(cert.u.size()) != n) return false;
  for (const Int& x : cert.u)
    if (x <= 0) return false;
  RatVec u(n);
  for (int i = 0; i < n; ++i) u[i] = Rat(cert.u[i]);
  RatVec img = mat_vec(block, u);
  switch (cert.type) {
    case VinbergType::Fin: {
      if (det(block) == 0) return false;
      for (const Rat& x : img)
        if (!(x > 0)) return false;
      return true;
    }
    case VinbergType::Aff: {
      if (n - rank(block) != 1) return false;
      for (const Rat& x : img)
        if (x != 0) return false;
      return true;
    }
    case VinbergType::Ind: {
      for (const Rat& x : img)
        if (!(x < 0)) return false;
      return true;
    }
  }
  return false;
}

const char* vinberg_name(VinbergType t) {
  switch (t) {
    case VinbergType::Fin: return "Fin";
    case VinbergType::Aff: return "Aff";
    case VinbergType::Ind: return "Ind";
  }
  return "?";
}

}  // namespace linepencils
