#include "linepencils/duality.hpp"

#include "linepencils/linalg.hpp"
#include "linepencils/os_algebra.hpp"

namespace linepencils {

namespace {

Int os_det(const IntMat& lift, const std::vector<LineSet>& pts, int pt_idx, int j,
           const std::array<int, 3>& triple) {
  const auto& [b, cc, dd] = triple;
  // row sums over the point at columns b, c, d
  Int sb = 0, sc = 0, sd = 0;
  for (int k : pts[pt_idx]) {
    sb += lift(k - 1, b - 1);
    sc += lift(k - 1, cc - 1);
    sd += lift(k - 1, dd - 1);
  }
  const Int &ab = lift(j - 1, b - 1), &ac = lift(j - 1, cc - 1), &ad = lift(j - 1, dd - 1);
  return sb * (ac - ad) - ab * (sc - sd) + (sc * ad - sd * ac);
}

std::vector<std::array<int, 3>> relation_triples(const LineCombinatorics& c) {
  std::vector<std::array<int, 3>> out;
  for (const LineSet& p : c.points) {
    int b = p.front();
    for (size_t x = 1; x < p.size(); ++x)
      for (size_t y = x + 1; y < p.size(); ++y) out.push_back({b, p[x], p[y]});
  }
  return out;
}

void require_unimodular(const IntMat& a) {
  Int d = det(a);
  if (d != 1 && d != -1)
    throw Error(ErrorCode::NotUnimodular, "candidate matrix must have determinant +-1");
}

}  // namespace

std::map<OsCoefficientKey, Int> os_coefficients(const LineCombinatorics& c, const IntMat& a) {
  IntMat lift = lift_to_generators(c, a);
  std::vector<LineSet> pts = all_points(c);
  std::map<OsCoefficientKey, Int> out;
  for (const auto& triple : relation_triples(c)) {
    for (size_t pi = 0; pi < pts.size(); ++pi) {
      const LineSet& p = pts[pi];
      for (size_t t = 1; t < p.size(); ++t)
        out[{triple, static_cast<int>(pi), p[t]}] =
            os_det(lift, pts, static_cast<int>(pi), p[t], triple);
    }
  }
  return out;
}

bool is_os_automorphism(const LineCombinatorics& c, const IntMat& a) {
  require_unimodular(a);
  IntMat lift = lift_to_generators(c, a);
  std::vector<LineSet> pts = all_points(c);
  auto vanishes = [&](const IntMat& l) {
    for (const auto& triple : relation_triples(c))
      for (size_t pi = 0; pi < pts.size(); ++pi) {
        const LineSet& p = pts[pi];
        for (size_t t = 1; t < p.size(); ++t)
          if (os_det(l, pts, static_cast<int>(pi), p[t], triple) != 0) return false;
      }
    return true;
  };
  if (!vanishes(lift)) return false;
  return vanishes(lift_to_generators(c, unimodular_inverse(a)));
}

bool duality_check(const LineCombinatorics& c, const IntMat& a) {
  require_unimodular(a);
  bool os_side = is_os_automorphism(c, a);
  bool h_side = is_aut1(c, a.transposed());
  if (os_side != h_side)
    throw Error(ErrorCode::DualityViolation, "transpose duality disagreement");
  return os_side;
}

}  // namespace linepencils
