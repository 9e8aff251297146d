#include <doctest.h>

#include <random>

#include "linepencils/fourier_motzkin.hpp"
#include "linepencils/lattice.hpp"
#include "linepencils/linalg.hpp"

using namespace linepencils;

TEST_CASE("kernel of the 2x2 difference matrix") {
  IntMat m{{1, -1}, {-1, 1}};
  auto kb = kernel_basis(m);
  REQUIRE(kb.size() == 1);
  CHECK(kb[0] == IntVec{1, 1});
}

TEST_CASE("kernel of the all-ones matrix has coordinate sums zero") {
  IntMat u(6, 6);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) u(i, j) = 1;
  auto kb = kernel_basis(u);
  REQUIRE(kb.size() == 5);
  for (const auto& v : kb) {
    Int s = 0;
    for (const Int& x : v) s += x;
    CHECK(s == 0);
  }
}

TEST_CASE("kernel of the ceva Q matrix is spanned by the pair indicators") {
  // diagonal 1, off-diagonal -1 exactly on (1,4), (2,5), (3,6)
  IntMat q(6, 6);
  for (int i = 0; i < 6; ++i) q(i, i) = 1;
  q(0, 3) = q(3, 0) = q(1, 4) = q(4, 1) = q(2, 5) = q(5, 2) = -1;
  auto kb = kernel_basis(q);
  REQUIRE(kb.size() == 3);
  IntMat got(3, 6), want{{1, 0, 0, 1, 0, 0}, {0, 1, 0, 0, 1, 0}, {0, 0, 1, 0, 0, 1}};
  for (int r = 0; r < 3; ++r) got.set_row(r, kb[r]);
  CHECK(rowspace_equal(got, want));
}

TEST_CASE("smith invariants") {
  CHECK(smith_invariants(IntMat::identity(2)) == std::vector<Int>{1, 1});
  CHECK(smith_invariants(IntMat{{2, 0}, {0, 3}}) == std::vector<Int>{1, 6});
  // 3-admissible matrix of the ceva combinatorics is an epimorphism
  IntMat ceva{{1, 0, -1, 1, 0, -1}, {0, 1, -1, 0, 1, -1}};
  CHECK(smith_invariants(ceva) == std::vector<Int>{1, 1});
}

TEST_CASE("smith divisibility chain on random matrices") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> dim(1, 5), entry(-6, 6);
  for (int t = 0; t < 200; ++t) {
    IntMat m(dim(rng), dim(rng));
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c) m(r, c) = entry(rng);
    auto inv = smith_invariants(m);
    for (size_t i = 0; i + 1 < inv.size(); ++i) {
      CHECK(inv[i] > 0);
      CHECK(inv[i + 1] % inv[i] == 0);
    }
  }
}

TEST_CASE("saturation") {
  CHECK(saturate(make_lattice(IntMat{{2, 0}})).basis == IntMat{{1, 0}});
  // a full-rank lattice saturates to the whole ambient lattice
  CHECK(saturate(make_lattice(IntMat{{2, 2}, {0, 4}})).basis == IntMat::identity(2));
  Lattice l = make_lattice(IntMat{{1, 2, 3}, {0, 5, 1}});
  Lattice s = saturate(l);
  CHECK(saturate(s).basis == s.basis);  // idempotent
  CHECK(rowspace_equal(s.basis, l.basis));
}

TEST_CASE("saturation is idempotent and span-preserving on random lattices") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (int t = 0; t < 100; ++t) {
    IntMat m(2, 4);
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 4; ++c) m(r, c) = entry(rng);
    if (rank(m) == 0) continue;
    IntMat s = saturated_row_basis(m);
    CHECK(rowspace_contains(s, m));
    CHECK(saturated_row_basis(s) == s);
    CHECK(rank(s) == rank(m));
  }
}

TEST_CASE("positive kernel points") {
  auto p = positive_kernel_point(IntMat{{1, -1}, {-1, 1}});
  REQUIRE(p.has_value());
  CHECK(*p == IntVec{1, 1});
  CHECK(!positive_kernel_point(IntMat::identity(3)).has_value());
  auto q = positive_kernel_point(IntMat{{1, 1, -2}});
  REQUIRE(q.has_value());
  CHECK((*q)[0] + (*q)[1] == 2 * (*q)[2]);
  for (const Int& x : *q) CHECK(x > 0);
}

TEST_CASE("rank-nullity on random rational matrices") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> dim(1, 6), entry(-3, 3);
  for (int t = 0; t < 200; ++t) {
    IntMat m(dim(rng), dim(rng));
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c) m(r, c) = entry(rng);
    CHECK(rank(m) + static_cast<int>(kernel_basis(m).size()) == m.cols());
  }
}

TEST_CASE("intersect kernels codimension") {
  CHECK(intersect_kernels_codim({}, 5) == 0);
  IntMat a{{1, 0, -1, 1, 0, -1}, {0, 1, -1, 0, 1, -1}};
  CHECK(intersect_kernels_codim({a}, 6) == 2);
  CHECK(intersect_kernels_codim({a, a}, 6) == 2);
}

TEST_CASE("hnf left solve decides lattice membership") {
  IntMat h = hnf(IntMat{{2, 1, 0}, {0, 3, 1}});
  CHECK(lattice_contains(h, IntVec{2, 1, 0}));
  CHECK(lattice_contains(h, IntVec{2, 4, 1}));
  CHECK(!lattice_contains(h, IntVec{1, 0, 0}));
  CHECK(!lattice_contains(h, IntVec{0, 0, 1}));
}

TEST_CASE("unimodular inverse") {
  IntMat a{{1, 2}, {1, 3}};
  IntMat inv = unimodular_inverse(a);
  CHECK(mat_mul(a, inv) == IntMat::identity(2));
}

TEST_CASE("fourier-motzkin handles infeasible strict systems") {
  FmSystem sys;
  sys.vars = 1;
  sys.add({Rat(1)}, Rat(0), true);
  sys.add({Rat(-1)}, Rat(0), true);
  CHECK(!fm_solve(sys).has_value());
}
