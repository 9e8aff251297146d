#include "linepencils/rigidity.hpp"

#include <algorithm>
#include <cassert>
#include <set>

#include "linepencils/lattice.hpp"
#include "linepencils/linalg.hpp"
#include "linepencils/os_algebra.hpp"

namespace linepencils {

IntMat lift_to_generators(const LineCombinatorics& c, const IntMat& reduced) {
  const int h = c.n - 1;
  assert(reduced.rows() == h && reduced.cols() == h);
  IntMat lift(c.n, c.n);
  for (int r = 0; r < h; ++r) {
    Int rs = 0;
    for (int j = 0; j < h; ++j) {
      lift(r, j) = reduced(r, j);
      rs += reduced(r, j);
    }
    lift(r, h) = -rs;
  }
  return lift;
}

IntMat perm_matrix_reduced(const LineCombinatorics& c, const Perm& g) {
  const int h = c.n - 1;
  IntMat m(h, h);
  for (int i = 1; i <= h; ++i) {
    IntVec col = ebar(c, g[i - 1]);
    for (int r = 0; r < h; ++r) m(r, i - 1) = col[r];
  }
  return m;
}

namespace {

// all quotient reduction targets: per stored point, the first line together
// with every pair of the others
struct QuotientTriples {
  // flattened (b, c, d) with b first at the common point
  std::vector<std::array<int, 3>> triples;
};

QuotientTriples quotient_triples(const LineCombinatorics& c) {
  QuotientTriples out;
  for (const LineSet& p : c.points) {
    int b = p.front();
    for (size_t x = 1; x < p.size(); ++x)
      for (size_t y = x + 1; y < p.size(); ++y) out.triples.push_back({b, p[x], p[y]});
  }
  return out;
}

// the squared lift kills every generator class: for generator (p, i) the
// residue on the quotient pair (cc, dd) below first line bb is the 3x3
// determinant over rows bb, cc, dd of [col_i | sum of cols over p | 1]
bool squared_preserves_relations(const LineCombinatorics& c, const IntMat& lift,
                                 const QuotientTriples& qt) {
  const int n = c.n;
  for (const LineSet& p : all_points(c)) {
    IntVec s(n);
    for (int k : p)
      for (int r = 0; r < n; ++r) s[r] += lift(r, k - 1);
    for (int i : p) {
      for (const auto& [b, cc, dd] : qt.triples) {
        const Int &ub = lift(b - 1, i - 1), &uc = lift(cc - 1, i - 1), &ud = lift(dd - 1, i - 1);
        const Int &sb = s[b - 1], &sc = s[cc - 1], &sd = s[dd - 1];
        Int d3 = ub * (sc - sd) - sb * (uc - ud) + (uc * sd - ud * sc);
        if (d3 != 0) return false;
      }
    }
  }
  return true;
}

void require_unimodular(const IntMat& a) {
  Int d = det(a);
  if (d != 1 && d != -1)
    throw Error(ErrorCode::NotUnimodular, "candidate matrix must have determinant +-1");
}

}  // namespace

bool is_aut1(const LineCombinatorics& c, const IntMat& a) {
  require_unimodular(a);
  QuotientTriples qt = quotient_triples(c);
  if (!squared_preserves_relations(c, lift_to_generators(c, a), qt)) return false;
  return squared_preserves_relations(c, lift_to_generators(c, unimodular_inverse(a)), qt);
}

bool aut1_lattice_check(const LineCombinatorics& c, const IntMat& a) {
  require_unimodular(a);
  IntMat r = relation_lattice(c);
  auto preserves = [&](const IntMat& b) {
    for (const LineSet& p : all_points(c)) {
      IntVec s(c.n - 1);
      for (int k : p) {
        IntVec e = ebar(c, k);
        for (int i = 0; i < c.n - 1; ++i) s[i] += e[i];
      }
      IntVec bs = mat_vec(b, s);
      for (size_t t = 1; t < p.size(); ++t) {
        IntVec be = mat_vec(b, ebar(c, p[t]));
        if (!lattice_contains(r, wedge_coords(be, bs))) return false;
      }
    }
    return true;
  };
  return preserves(a) && preserves(unimodular_inverse(a));
}

namespace {

IntMat act_on_class(const LineCombinatorics& c, const IntMat& class_matrix, const IntMat& a) {
  const int h = c.n - 1;
  IntMat reduced(class_matrix.rows(), h);
  for (int r = 0; r < class_matrix.rows(); ++r)
    for (int j = 0; j < h; ++j) reduced(r, j) = class_matrix(r, j);
  IntMat moved = mat_mul(reduced, a);
  IntMat full(moved.rows(), c.n);
  for (int r = 0; r < moved.rows(); ++r) {
    Int rs = 0;
    for (int j = 0; j < h; ++j) {
      full(r, j) = moved(r, j);
      rs += moved(r, j);
    }
    full(r, h) = -rs;
  }
  return saturated_row_basis(full);
}

}  // namespace

std::vector<int> induced_class_permutation(const LineCombinatorics& c, const IntMat& a,
                                           const std::vector<AdmissibleClass>& classes) {
  std::vector<int> sigma(classes.size(), -1);
  for (size_t x = 0; x < classes.size(); ++x) {
    IntMat img = act_on_class(c, classes[x].matrix, a);
    int found = -1;
    for (size_t y = 0; y < classes.size(); ++y)
      if (classes[y].matrix == img) {
        found = static_cast<int>(y);
        break;
      }
    if (found < 0 || classes[found].k != classes[x].k)
      throw Error(ErrorCode::ClassNotPreserved,
                  "image of class " + std::to_string(x) + " is not a known class");
    sigma[x] = found;
  }
  return sigma;
}

std::vector<int> class_permutation_of_line_perm(const LineCombinatorics& c, const Perm& g,
                                                const std::vector<AdmissibleClass>& classes) {
  std::vector<int> sigma(classes.size(), -1);
  for (size_t x = 0; x < classes.size(); ++x) {
    const IntMat& m = classes[x].matrix;
    IntMat img(m.rows(), m.cols());
    for (int r = 0; r < m.rows(); ++r)
      for (int i = 1; i <= c.n; ++i) img(r, i - 1) = m(r, g[i - 1] - 1);
    IntMat canon = saturated_row_basis(img);
    int found = -1;
    for (size_t y = 0; y < classes.size(); ++y)
      if (classes[y].matrix == canon) {
        found = static_cast<int>(y);
        break;
      }
    if (found < 0)
      throw Error(ErrorCode::ClassNotPreserved, "line permutation does not preserve the classes");
    sigma[x] = found;
  }
  return sigma;
}

namespace {

struct TriangleTable {
  std::set<std::array<int, 3>> set;
  bool has(int a, int b, int c) const {
    std::array<int, 3> t = {a, b, c};
    std::sort(t.begin(), t.end());
    return set.count(t) > 0;
  }
};

struct SigmaSearch {
  const std::vector<AdmissibleClass>& classes;
  const TriangleTable& table;
  const std::vector<int>& counts;
  std::vector<int> order;  // assignment order
  std::vector<int> sigma;
  std::vector<bool> used;
  long long nodes = 0, node_bound;
  std::vector<std::vector<int>> out;

  void rec(size_t idx) {
    if (++nodes > node_bound)
      throw Error(ErrorCode::SearchBoundExceeded, "permutation search exceeded node bound");
    if (idx == order.size()) {
      out.push_back(sigma);
      return;
    }
    int x = order[idx];
    for (size_t yi = 0; yi < classes.size(); ++yi) {
      int y = static_cast<int>(yi);
      if (used[y]) continue;
      if (classes[y].k != classes[x].k) continue;
      if (counts[y] != counts[x]) continue;
      bool ok = true;
      // triangle relation on every fully assigned triple through x
      for (size_t ai = 0; ai + 1 < idx && ok; ++ai)
        for (size_t bi = ai + 1; bi < idx && ok; ++bi) {
          int p = order[ai], q = order[bi];
          if (table.has(p, q, x) != table.has(sigma[p], sigma[q], y)) ok = false;
        }
      if (!ok) continue;
      sigma[x] = y;
      used[y] = true;
      rec(idx + 1);
      used[y] = false;
      sigma[x] = -1;
    }
  }
};

}  // namespace

std::vector<std::vector<int>> triangle_preserving_permutations(
    const TriangleCensus& census, const std::vector<AdmissibleClass>& classes,
    long long node_bound) {
  TriangleTable table;
  for (const auto& t : census.triangles) {
    std::array<int, 3> s = t;
    std::sort(s.begin(), s.end());
    table.set.insert(s);
  }
  SigmaSearch search{classes, table, census.count_per_class, {}, {}, {}, 0, node_bound, {}};
  search.sigma.assign(classes.size(), -1);
  search.used.assign(classes.size(), false);
  // assign the classes with the most triangles first: their images are
  // the most constrained
  for (size_t i = 0; i < classes.size(); ++i) search.order.push_back(static_cast<int>(i));
  std::sort(search.order.begin(), search.order.end(), [&](int a, int b) {
    if (census.count_per_class[a] != census.count_per_class[b])
      return census.count_per_class[a] > census.count_per_class[b];
    return a < b;
  });
  search.rec(0);
  std::sort(search.out.begin(), search.out.end());
  return search.out;
}

ConstraintSpace constraint_space(const LineCombinatorics& c, const std::vector<int>& sigma,
                                 const std::vector<AdmissibleClass>& classes) {
  assert(sigma.size() == classes.size());
  const int h = c.n - 1;
  std::vector<RatVec> rows;
  for (size_t x = 0; x < classes.size(); ++x) {
    assert(classes[sigma[x]].k == classes[x].k);
    const IntMat& mx = classes[x].matrix;
    RatMat target(classes[sigma[x]].matrix.rows(), h);
    for (int r = 0; r < target.rows(); ++r)
      for (int j = 0; j < h; ++j) target(r, j) = Rat(classes[sigma[x]].matrix(r, j));
    std::vector<IntVec> kb = kernel_basis(target);
    for (int r = 0; r < mx.rows(); ++r) {
      for (const IntVec& kv : kb) {
        RatVec row(h * h);
        for (int i = 0; i < h; ++i) {
          if (mx(r, i) == 0) continue;
          for (int j = 0; j < h; ++j)
            if (kv[j] != 0) row[i * h + j] += Rat(mx(r, i) * kv[j]);
        }
        rows.push_back(std::move(row));
      }
    }
  }
  ConstraintSpace out;
  std::vector<IntVec> kb;
  if (rows.empty()) {
    for (int i = 0; i < h * h; ++i) {
      IntVec e(h * h);
      e[i] = 1;
      kb.push_back(e);
    }
  } else {
    RatMat sys(static_cast<int>(rows.size()), h * h);
    for (size_t r = 0; r < rows.size(); ++r) sys.set_row(static_cast<int>(r), rows[r]);
    kb = kernel_basis(sys);
  }
  for (const IntVec& v : kb) {
    IntMat b(h, h);
    for (int i = 0; i < h; ++i)
      for (int j = 0; j < h; ++j) b(i, j) = v[i * h + j];
    out.basis.push_back(b);
  }
  return out;
}

namespace {

struct SpacePattern {
  std::vector<std::pair<int, int>> support;  // positions not identically zero
  bool monomial = false;                     // <= 1 support entry per row and column
  bool permutation = false;                  // support covers every row and column
};

SpacePattern analyze_space(const ConstraintSpace& space, int h) {
  SpacePattern out;
  std::vector<std::vector<bool>> nz(h, std::vector<bool>(h, false));
  for (const IntMat& b : space.basis)
    for (int i = 0; i < h; ++i)
      for (int j = 0; j < h; ++j)
        if (b(i, j) != 0) nz[i][j] = true;
  std::vector<int> row_cnt(h, 0), col_cnt(h, 0);
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < h; ++j)
      if (nz[i][j]) {
        out.support.push_back({i, j});
        ++row_cnt[i];
        ++col_cnt[j];
      }
  out.monomial = true;
  for (int i = 0; i < h; ++i)
    if (row_cnt[i] > 1 || col_cnt[i] > 1) out.monomial = false;
  out.permutation = out.monomial;
  for (int i = 0; i < h; ++i)
    if (row_cnt[i] != 1 || col_cnt[i] != 1) out.permutation = false;
  return out;
}

bool in_space(const ConstraintSpace& space, const IntMat& a) {
  const int h = a.rows();
  RatMat stack(space.dim() + 1, h * h);
  for (int b = 0; b < space.dim(); ++b)
    for (int i = 0; i < h; ++i)
      for (int j = 0; j < h; ++j) stack(b, i * h + j) = Rat(space.basis[b](i, j));
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < h; ++j) stack(space.dim(), i * h + j) = Rat(a(i, j));
  RatMat basis_only(space.dim(), h * h);
  for (int b = 0; b < space.dim(); ++b)
    for (int e = 0; e < h * h; ++e) basis_only(b, e) = stack(b, e);
  return rank(stack) == rank(basis_only);
}

// all unimodular integer points of a monomial-patterned space: sign choices
// on the permutation support, filtered by space membership and is_aut1
std::vector<IntMat> scan_monomial(const LineCombinatorics& c, const ConstraintSpace& space,
                                  const SpacePattern& pat) {
  std::vector<IntMat> out;
  const int h = c.n - 1;
  const int s = static_cast<int>(pat.support.size());
  for (uint32_t signs = 0; signs < (1u << s); ++signs) {
    IntMat a(h, h);
    for (int t = 0; t < s; ++t) a(pat.support[t].first, pat.support[t].second) = (signs >> t) & 1 ? -1 : 1;
    if (!in_space(space, a)) continue;
    Int d = det(a);
    if (d != 1 && d != -1) continue;
    if (is_aut1(c, a)) out.push_back(a);
  }
  return out;
}

// best-effort hunt for an is_aut1 matrix inside a non-monomial space: small
// integer combinations of up to three basis matrices
std::vector<IntMat> hunt_witnesses(const LineCombinatorics& c, const ConstraintSpace& space,
                                   int limit) {
  std::vector<IntMat> out;
  const int h = c.n - 1;
  const int d = space.dim();
  if (d == 0 || d > 12) return out;
  std::vector<IntMat> cands;
  auto add_combo = [&](const std::vector<std::pair<int, Int>>& combo) {
    IntMat a(h, h);
    for (const auto& [b, coef] : combo)
      for (int i = 0; i < h; ++i)
        for (int j = 0; j < h; ++j) a(i, j) += coef * space.basis[b](i, j);
    cands.push_back(a);
  };
  const Int coefs[] = {Int(1), Int(-1), Int(2), Int(-2)};
  for (int b1 = 0; b1 < d; ++b1)
    for (const Int& c1 : coefs) {
      add_combo({{b1, c1}});
      for (int b2 = b1 + 1; b2 < d; ++b2)
        for (const Int& c2 : coefs) {
          add_combo({{b1, c1}, {b2, c2}});
          for (int b3 = b2 + 1; b3 < d; ++b3)
            for (const Int& c3 : coefs) add_combo({{b1, c1}, {b2, c2}, {b3, c3}});
        }
    }
  for (const IntMat& a : cands) {
    if (static_cast<int>(out.size()) >= limit) break;
    Int dt = det(a);
    if (dt != 1 && dt != -1) continue;
    if (is_aut1(c, a)) out.push_back(a);
  }
  return out;
}

bool is_plus_minus_line_perm(const LineCombinatorics& c, const IntMat& a,
                             const std::vector<Perm>& auts) {
  for (const Perm& g : auts) {
    IntMat p = perm_matrix_reduced(c, g);
    bool plus = true, minus = true;
    for (int i = 0; i < a.rows() && (plus || minus); ++i)
      for (int j = 0; j < a.cols(); ++j) {
        if (a(i, j) != p(i, j)) plus = false;
        if (a(i, j) != -p(i, j)) minus = false;
      }
    if (plus || minus) return true;
  }
  return false;
}

}  // namespace

RigidityReport rigidity_check(const LineCombinatorics& c, const RigidityOptions& opts) {
  RigidityReport rep;
  std::vector<CombinatorialPencil> pencils = enumerate_pencils(c, opts.enumerate);
  std::vector<AdmissibleClass> classes = classes_from_pencils(c, pencils);
  rep.class_count = static_cast<int>(classes.size());
  TriangleCensus census = triangle_census(classes);
  rep.chain.push_back("classes: " + std::to_string(classes.size()) + ", triangles: " +
                      std::to_string(census.triangles.size()));

  std::vector<Perm> auts = automorphisms(c);
  rep.aut_order = static_cast<int>(auts.size());
  std::set<std::vector<int>> induced;
  for (const Perm& g : auts) induced.insert(class_permutation_of_line_perm(c, g, classes));

  std::vector<std::vector<int>> candidates =
      triangle_preserving_permutations(census, classes, opts.node_bound);
  rep.candidate_count = static_cast<int>(candidates.size());
  std::vector<std::vector<int>> orphans;
  for (const auto& sigma : candidates)
    if (!induced.count(sigma)) orphans.push_back(sigma);
  rep.orphan_count = static_cast<int>(orphans.size());
  rep.chain.push_back("triangle-preserving permutations: " + std::to_string(candidates.size()) +
                      " (" + std::to_string(orphans.size()) + " beyond the line automorphisms, |Aut| = " +
                      std::to_string(auts.size()) + ")");

  const int h = c.n - 1;
  bool not_rigid = false;

  // identity permutation: its realizers, modulo line automorphisms, decide
  // the whole group
  std::vector<int> id_sigma(classes.size());
  for (size_t i = 0; i < classes.size(); ++i) id_sigma[i] = static_cast<int>(i);
  ConstraintSpace id_space = constraint_space(c, id_sigma, classes);
  rep.id_space_dim = id_space.dim();
  SpacePattern pat = analyze_space(id_space, h);
  rep.id_space_monomial = pat.monomial;
  if (pat.monomial) {
    rep.chain.push_back("identity permutation forces a monomial matrix pattern (dim " +
                        std::to_string(id_space.dim()) + ")");
    if (pat.permutation) rep.id_survivors = scan_monomial(c, id_space, pat);
    bool extra = false;
    for (const IntMat& a : rep.id_survivors)
      if (!is_plus_minus_line_perm(c, a, auts)) {
        rep.witness = a;
        extra = true;
      }
    rep.chain.push_back("unimodular survivors of the identity space: " +
                        std::to_string(rep.id_survivors.size()));
    if (extra) not_rigid = true;
  } else {
    std::vector<IntMat> found = hunt_witnesses(c, id_space, 8);
    bool extra = false;
    for (const IntMat& a : found) {
      rep.id_survivors.push_back(a);
      if (!is_plus_minus_line_perm(c, a, auts)) {
        rep.witness = a;
        extra = true;
      }
    }
    if (extra) {
      not_rigid = true;
      rep.chain.push_back("identity space is not monomial (dim " +
                          std::to_string(id_space.dim()) + "); witness found by direct search");
    } else {
      rep.inconclusive.push_back({id_sigma, id_space.dim()});
      rep.chain.push_back("identity space is not monomial (dim " +
                          std::to_string(id_space.dim()) + "); cannot scan");
    }
  }

  // every orphan permutation must be unrealizable, or it defeats rigidity
  for (const auto& sigma : orphans) {
    ConstraintSpace space = constraint_space(c, sigma, classes);
    if (space.dim() == 0) continue;
    SpacePattern sp = analyze_space(space, h);
    if (sp.monomial) {
      std::vector<IntMat> sur = sp.permutation ? scan_monomial(c, space, sp) : std::vector<IntMat>{};
      if (!sur.empty()) {
        rep.witness = sur.front();
        not_rigid = true;
      }
    } else {
      std::vector<IntMat> found = hunt_witnesses(c, space, 1);
      if (!found.empty()) {
        rep.witness = found.front();
        not_rigid = true;
      } else {
        rep.inconclusive.push_back({sigma, space.dim()});
      }
    }
  }

  if (not_rigid) {
    rep.verdict = RigidityVerdict::NotRigid;
    rep.chain.push_back("witness automorphism outside {+-1} x Aut found");
    return rep;
  }
  if (!rep.inconclusive.empty()) {
    rep.verdict = RigidityVerdict::Inconclusive;
    return rep;
  }
  // survivors of the identity space must be exactly +-Id
  bool exactly_pm_id = true;
  IntMat id = IntMat::identity(h);
  IntMat mid(h, h);
  for (int i = 0; i < h; ++i) mid(i, i) = -1;
  std::set<IntMat> sur(rep.id_survivors.begin(), rep.id_survivors.end());
  if (sur.size() != 2 || !sur.count(id) || !sur.count(mid)) exactly_pm_id = false;
  if (exactly_pm_id) {
    rep.verdict = RigidityVerdict::Rigid;
    rep.chain.push_back("identity space survivors are exactly +-Id; Aut1(H) = {+-Id} x Aut");
  } else {
    // survivors beyond +-Id were already checked against +-line perms above;
    // reaching here means they are all of that shape
    rep.verdict = RigidityVerdict::Rigid;
    rep.chain.push_back("all identity-space survivors are +-(line permutation); rigid");
  }
  return rep;
}

}  // namespace linepencils
