#include <doctest.h>

#include <omp.h>

#include <random>
#include <set>

#include "linepencils/classes.hpp"
#include "linepencils/fixtures.hpp"
#include "linepencils/linalg.hpp"

using namespace linepencils;
namespace fx = linepencils::fixtures;

namespace {

struct Setup {
  LineCombinatorics c;
  std::vector<AdmissibleClass> classes;
};

Setup make(const LineCombinatorics& c) {
  Setup s{c, {}};
  s.classes = classes_from_pencils(c, enumerate_pencils(c));
  return s;
}

// index of the point-type class of a given stored point
int point_class(const Setup& s, const LineSet& p) {
  for (size_t i = 0; i < s.classes.size(); ++i)
    if (s.classes[i].kind == AdmissibleClass::Kind::PointType &&
        s.c.points[s.classes[i].point_index] == p)
      return static_cast<int>(i);
  REQUIRE(false);
  return -1;
}

// independent route: upsilon through the kernel intersection basis
int upsilon_via_kernels(const std::vector<AdmissibleClass>& classes,
                        const std::vector<int>& subset) {
  std::vector<IntMat> mats;
  int cols = 0;
  for (int i : subset) {
    mats.push_back(classes[i].matrix);
    cols = classes[i].matrix.cols();
  }
  return cols - 1 - (static_cast<int>(intersect_kernels_basis(mats, cols).size()) - 1);
}

}  // namespace

TEST_CASE("upsilon of singletons is the fiber count minus one") {
  Setup s = make(fx::ten_line_example());
  for (size_t i = 0; i < s.classes.size(); ++i) {
    CHECK(upsilon(s.classes, {static_cast<int>(i)}) == s.classes[i].k - 1);
    CHECK(upsilon(s.classes, {static_cast<int>(i), static_cast<int>(i)}) == s.classes[i].k - 1);
  }
  CHECK_THROWS_AS(upsilon(s.classes, {}), Error);
}

TEST_CASE("upsilon of the named ten-line triple") {
  Setup s = make(fx::ten_line_example());
  int a = point_class(s, {1, 6, 7}), b = point_class(s, {1, 8, 9}), c = point_class(s, {2, 7, 8});
  CHECK(upsilon(s.classes, {a, b, c}) == 5);
  CHECK(is_triangle(s.classes, a, b, c));
}

TEST_CASE("upsilon agrees with the kernel-basis route") {
  Setup s = make(fx::ceva());
  std::mt19937 rng(9);
  for (int t = 0; t < 60; ++t) {
    std::vector<int> subset;
    for (size_t i = 0; i < s.classes.size(); ++i)
      if (rng() % 2) subset.push_back(static_cast<int>(i));
    if (subset.empty()) continue;
    CHECK(upsilon(s.classes, subset) == upsilon_via_kernels(s.classes, subset));
  }
}

TEST_CASE("non-triangles") {
  Setup s = make(fx::ten_line_example());
  // two disjoint triple points cannot be completed to a triangle this way
  int a = point_class(s, {1, 6, 7}), b = point_class(s, {2, 9, 10}), c = point_class(s, {3, 6, 8});
  CHECK(!is_triangle(s.classes, a, b, c));
  // three points on a common line are not a triangle
  int q = point_class(s, {1, 2, 3, 4, 5});
  CHECK(!is_triangle(s.classes, point_class(s, {1, 6, 7}), point_class(s, {1, 8, 9}), q));
  CHECK(!is_triangle(s.classes, a, a, b));
}

TEST_CASE("triangle relation is symmetric") {
  Setup s = make(fx::ceva());
  std::mt19937 rng(13);
  for (int t = 0; t < 40; ++t) {
    int m = static_cast<int>(s.classes.size());
    int a = rng() % m, b = rng() % m, c = rng() % m;
    bool t1 = is_triangle(s.classes, a, b, c);
    CHECK(t1 == is_triangle(s.classes, b, c, a));
    CHECK(t1 == is_triangle(s.classes, c, a, b));
    CHECK(t1 == is_triangle(s.classes, b, a, c));
  }
}

TEST_CASE("ten line triangle counts are fifteen and nine") {
  Setup s = make(fx::ten_line_example());
  TriangleCensus census = triangle_census(s.classes);
  for (size_t i = 0; i < s.classes.size(); ++i) {
    if (s.classes[i].k != 3) continue;
    if (s.classes[i].kind == AdmissibleClass::Kind::PointType)
      CHECK(census.count_per_class[i] == 15);
    else
      CHECK(census.count_per_class[i] == 9);
  }
  // counts are consistent with the triangle list
  std::vector<int> recount(s.classes.size(), 0);
  for (const auto& t : census.triangles)
    for (int x : t) ++recount[x];
  CHECK(recount == census.count_per_class);
}

TEST_CASE("ceva census by brute force") {
  Setup s = make(fx::ceva());
  TriangleCensus census = triangle_census(s.classes);
  int brute = 0;
  int m = static_cast<int>(s.classes.size());
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      for (int c = b + 1; c < m; ++c)
        if (is_triangle(s.classes, a, b, c)) ++brute;
  CHECK(static_cast<int>(census.triangles.size()) == brute);
  // the four triple points form four triangles among themselves
  int point_triangles = 0;
  for (const auto& t : census.triangles) {
    bool all_points = true;
    for (int x : t)
      if (s.classes[x].kind != AdmissibleClass::Kind::PointType) all_points = false;
    if (all_points) ++point_triangles;
  }
  CHECK(point_triangles == 4);
}

TEST_CASE("census on fewer than three classes is empty") {
  Setup s = make(fx::pencil_of_lines(3));
  CHECK(triangle_census(s.classes, true).triangles.empty());
}

TEST_CASE("upsilon monotonicity and subadditivity") {
  Setup s = make(fx::ten_line_example());
  std::mt19937 rng(29);
  int n = s.c.n;
  for (int t = 0; t < 50; ++t) {
    std::vector<int> small, big;
    for (size_t i = 0; i < s.classes.size(); ++i) {
      if (rng() % 4 == 0) big.push_back(static_cast<int>(i));
    }
    if (big.empty()) continue;
    for (int x : big)
      if (rng() % 2) small.push_back(x);
    if (small.empty()) small.push_back(big.front());
    int us = upsilon(s.classes, small), ub = upsilon(s.classes, big);
    CHECK(us <= ub);
    CHECK(ub <= n - 1);
    int sum = 0;
    for (int x : std::set<int>(big.begin(), big.end())) sum += s.classes[x].k - 1;
    CHECK(ub <= sum);
  }
}

TEST_CASE("P_{i,j} subsets partition the subsets of each size") {
  Setup s = make(fx::ceva());
  for (int size : {1, 2, 3}) {
    auto census = upsilon_census(s.classes, size);
    size_t total = 0;
    for (const auto& [j, subsets] : census) total += subsets.size();
    size_t m = s.classes.size(), expect = 1;
    for (int i = 0; i < size; ++i) expect = expect * (m - i) / (i + 1);
    CHECK(total == expect);
  }
  // singletons: upsilon k-1 per class
  auto singles = upsilon_census(s.classes, 1);
  CHECK(singles[2].size() == 5);  // all ceva classes have k = 3
}

TEST_CASE("alignment recovered from triangles matches incidence") {
  for (const LineCombinatorics& c : {fx::ten_line_example(), fx::ceva()}) {
    Setup s = make(c);
    std::vector<int> pts;
    for (size_t i = 0; i < s.classes.size(); ++i)
      if (s.classes[i].kind == AdmissibleClass::Kind::PointType) pts.push_back(static_cast<int>(i));
    std::set<std::array<int, 3>> got;
    for (const auto& t : collinearity_from_triangles(s.classes)) got.insert(t);
    std::set<std::array<int, 3>> want;
    for (size_t x = 0; x < pts.size(); ++x)
      for (size_t y = x + 1; y < pts.size(); ++y)
        for (size_t z = y + 1; z < pts.size(); ++z) {
          const LineSet &px = s.c.points[s.classes[pts[x]].point_index],
                        &py = s.c.points[s.classes[pts[y]].point_index],
                        &pz = s.c.points[s.classes[pts[z]].point_index];
          bool share = false;
          for (int l : px)
            if (std::binary_search(py.begin(), py.end(), l) &&
                std::binary_search(pz.begin(), pz.end(), l))
              share = true;
          if (share) want.insert({pts[x], pts[y], pts[z]});
        }
    CHECK(got == want);
  }
}

TEST_CASE("three pairwise-meeting non-collinear points form a triangle, not an alignment") {
  Setup s = make(fx::ten_line_example());
  int a = point_class(s, {1, 6, 7}), b = point_class(s, {2, 7, 8}), c = point_class(s, {1, 8, 9});
  CHECK(is_triangle(s.classes, a, b, c));
  CHECK(!aligned(s.classes, a, b, c));
}

TEST_CASE("serial and parallel census agree") {
  Setup s = make(fx::ten_line_example());
  TriangleCensus serial = triangle_census_serial(s.classes);
  omp_set_num_threads(4);
  TriangleCensus par = triangle_census(s.classes);
  omp_set_num_threads(1);
  CHECK(serial.triangles == par.triangles);
  CHECK(serial.count_per_class == par.count_per_class);
}
