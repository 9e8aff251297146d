#include "linepencils/fourier_motzkin.hpp"

#include <algorithm>
#include <cassert>
#include <set>

#include "linepencils/linalg.hpp"

namespace linepencils {

namespace {

// drop exact duplicates after scaling to a primitive normal form; keeps the
// constraint count from exploding during elimination
void dedup(std::vector<LinConstraint>& cs) {
  std::set<std::pair<std::vector<std::pair<long, unsigned long>>, bool>> seen;
  std::vector<LinConstraint> out;
  for (LinConstraint& k : cs) {
    RatVec full = k.a;
    full.push_back(k.c);
    IntVec prim = primitive(full, /*keep_sign=*/true);
    std::vector<std::pair<long, unsigned long>> key;
    key.reserve(prim.size());
    bool small = true;
    for (const Int& x : prim) {
      if (!x.fits_slong_p()) {
        small = false;
        break;
      }
      key.push_back({x.get_si(), 0});
    }
    if (small) {
      if (!seen.insert({key, k.strict}).second) continue;
    }
    out.push_back(std::move(k));
  }
  cs.swap(out);
}

}  // namespace

std::optional<RatVec> fm_solve(const FmSystem& sys) {
  const int n = sys.vars;
  // levels[v] holds the system right before variable v is eliminated
  std::vector<std::vector<LinConstraint>> levels(n + 1);
  levels[0] = sys.constraints;
  for (int v = 0; v < n; ++v) {
    std::vector<LinConstraint> lower, upper, rest;
    for (const LinConstraint& k : levels[v]) {
      if (k.a[v] > 0)
        lower.push_back(k);
      else if (k.a[v] < 0)
        upper.push_back(k);
      else
        rest.push_back(k);
    }
    // pair each lower bound with each upper bound
    for (const LinConstraint& lo : lower)
      for (const LinConstraint& up : upper) {
        LinConstraint k;
        k.a.assign(sys.vars, Rat(0));
        Rat s = lo.a[v], t = -up.a[v];
        for (int j = 0; j < sys.vars; ++j) k.a[j] = t * lo.a[j] + s * up.a[j];
        k.c = t * lo.c + s * up.c;
        k.strict = lo.strict || up.strict;
        k.a[v] = 0;
        rest.push_back(std::move(k));
      }
    dedup(rest);
    levels[v + 1] = std::move(rest);
  }
  // all variables gone: constant constraints decide feasibility
  for (const LinConstraint& k : levels[n]) {
    if (k.strict ? !(k.c > 0) : !(k.c >= 0)) return std::nullopt;
  }
  // back substitution, last eliminated variable first
  RatVec x(n);
  for (int v = n - 1; v >= 0; --v) {
    bool has_lo = false, has_up = false, lo_strict = false, up_strict = false;
    Rat lo, up;
    for (const LinConstraint& k : levels[v]) {
      if (k.a[v] == 0) continue;
      Rat bound = -k.c;
      for (int j = v + 1; j < n; ++j) bound -= k.a[j] * x[j];
      bound /= k.a[v];
      if (k.a[v] > 0) {  // x_v >(=) bound
        if (!has_lo || bound > lo || (bound == lo && k.strict)) {
          lo = bound;
          lo_strict = k.strict;
        }
        has_lo = true;
      } else {  // x_v <(=) bound
        if (!has_up || bound < up || (bound == up && k.strict)) {
          up = bound;
          up_strict = k.strict;
        }
        has_up = true;
      }
    }
    if (has_lo && has_up) {
      assert(lo < up || (lo == up && !lo_strict && !up_strict));
      x[v] = (lo == up) ? lo : (lo + up) / 2;
    } else if (has_lo) {
      x[v] = lo_strict ? lo + 1 : lo;
    } else if (has_up) {
      x[v] = up_strict ? up - 1 : up;
    } else {
      x[v] = 0;
    }
  }
  return x;
}

std::optional<IntVec> positive_kernel_point(const RatMat& a) {
  const int n = a.cols();
  if (n == 0) return std::nullopt;
  std::vector<IntVec> kb = kernel_basis(a);
  if (kb.empty()) return std::nullopt;
  const int d = static_cast<int>(kb.size());
  // x = K t with t free; require every coordinate of x strictly positive
  FmSystem sys;
  sys.vars = d;
  for (int i = 0; i < n; ++i) {
    RatVec row(d);
    for (int j = 0; j < d; ++j) row[j] = Rat(kb[j][i]);
    sys.add(row, Rat(0), /*strict=*/true);
  }
  auto t = fm_solve(sys);
  if (!t) return std::nullopt;
  RatVec x(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < d; ++j) x[i] += Rat(kb[j][i]) * (*t)[j];
  IntVec out = primitive(x, /*keep_sign=*/true);
  for (const Int& v : out) assert(v > 0);
  return out;
}

std::optional<IntVec> positive_kernel_point(const IntMat& a) {
  return positive_kernel_point(to_rational(a));
}

}  // namespace linepencils
