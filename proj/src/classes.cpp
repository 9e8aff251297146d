#include "linepencils/classes.hpp"

#include <omp.h>

#include <algorithm>
#include <set>

#include "linepencils/linalg.hpp"

namespace linepencils {

std::vector<AdmissibleClass> classes_from_pencils(const LineCombinatorics& c,
                                                  const std::vector<CombinatorialPencil>& pencils) {
  std::vector<AdmissibleClass> out;
  for (const CombinatorialPencil& p : pencils) {
    AdmissibleClass cl;
    cl.matrix = p.class_matrix;
    cl.k = p.k();
    cl.kind = p.point_type ? AdmissibleClass::Kind::PointType : AdmissibleClass::Kind::PencilType;
    if (p.point_type) {
      for (size_t pi = 0; pi < c.points.size(); ++pi)
        if (c.points[pi] == p.support) cl.point_index = static_cast<int>(pi);
    }
    cl.pencil = p;
    out.push_back(std::move(cl));
  }
  return out;
}

int upsilon(const std::vector<AdmissibleClass>& classes, const std::vector<int>& subset) {
  if (subset.empty())
    throw Error(ErrorCode::ValidationError, "upsilon of the empty set is not defined");
  std::set<int> uniq(subset.begin(), subset.end());
  std::vector<IntMat> mats;
  int cols = 0;
  for (int i : uniq) {
    mats.push_back(classes.at(i).matrix);
    cols = classes.at(i).matrix.cols();
  }
  return intersect_kernels_codim(mats, cols);
}

bool is_triangle(const std::vector<AdmissibleClass>& classes, int a, int b, int c) {
  if (a == b || a == c || b == c) return false;
  int total = upsilon(classes, {a, b, c});
  int sum = (classes[a].k - 1) + (classes[b].k - 1) + (classes[c].k - 1);
  return total == sum - 1;
}

namespace {

TriangleCensus census_impl(const std::vector<AdmissibleClass>& classes, bool include_higher_k,
                           bool parallel) {
  std::vector<int> scope;
  for (size_t i = 0; i < classes.size(); ++i)
    if (include_higher_k || classes[i].k == 3) scope.push_back(static_cast<int>(i));
  TriangleCensus out;
  out.count_per_class.assign(classes.size(), 0);
  const int s = static_cast<int>(scope.size());
  std::vector<std::array<int, 3>> tris;
#pragma omp parallel if (parallel)
  {
    std::vector<std::array<int, 3>> local;
#pragma omp for schedule(dynamic)
    for (int a = 0; a < s; ++a)
      for (int b = a + 1; b < s; ++b)
        for (int c = b + 1; c < s; ++c)
          if (is_triangle(classes, scope[a], scope[b], scope[c]))
            local.push_back({scope[a], scope[b], scope[c]});
#pragma omp critical
    tris.insert(tris.end(), local.begin(), local.end());
  }
  std::sort(tris.begin(), tris.end());
  out.triangles = std::move(tris);
  for (const auto& t : out.triangles)
    for (int x : t) ++out.count_per_class[x];
  return out;
}

}  // namespace

TriangleCensus triangle_census(const std::vector<AdmissibleClass>& classes, bool include_higher_k) {
  return census_impl(classes, include_higher_k, true);
}

TriangleCensus triangle_census_serial(const std::vector<AdmissibleClass>& classes,
                                      bool include_higher_k) {
  return census_impl(classes, include_higher_k, false);
}

std::map<int, std::vector<std::vector<int>>> upsilon_census(
    const std::vector<AdmissibleClass>& classes, int subset_size) {
  std::map<int, std::vector<std::vector<int>>> out;
  const int m = static_cast<int>(classes.size());
  std::vector<int> idx;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(idx.size()) == subset_size) {
      out[upsilon(classes, idx)].push_back(idx);
      return;
    }
    for (int i = start; i < m; ++i) {
      idx.push_back(i);
      rec(i + 1);
      idx.pop_back();
    }
  };
  rec(0);
  return out;
}

bool aligned(const std::vector<AdmissibleClass>& classes, int a, int b, int c) {
  bool witness = false;
  for (size_t d = 0; d < classes.size() && !witness; ++d) {
    if (classes[d].kind != AdmissibleClass::Kind::PointType) continue;
    int di = static_cast<int>(d);
    if (di == a || di == b || di == c) continue;
    witness = is_triangle(classes, a, b, di) && is_triangle(classes, a, c, di) &&
              is_triangle(classes, b, c, di);
  }
  if (!witness) return false;
  return !is_triangle(classes, a, b, c);
}

std::vector<std::array<int, 3>> collinearity_from_triangles(
    const std::vector<AdmissibleClass>& classes) {
  std::vector<int> pts;
  for (size_t i = 0; i < classes.size(); ++i)
    if (classes[i].kind == AdmissibleClass::Kind::PointType) pts.push_back(static_cast<int>(i));
  std::vector<std::array<int, 3>> out;
  for (size_t x = 0; x < pts.size(); ++x)
    for (size_t y = x + 1; y < pts.size(); ++y)
      for (size_t z = y + 1; z < pts.size(); ++z)
        if (aligned(classes, pts[x], pts[y], pts[z])) out.push_back({pts[x], pts[y], pts[z]});
  return out;
}

}  // namespace linepencils
