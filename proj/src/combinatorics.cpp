#include "linepencils/combinatorics.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

namespace linepencils {

LineCombinatorics validate(int n, std::vector<LineSet> raw_points) {
  if (n < 1) throw Error(ErrorCode::ValidationError, "need at least one line");
  for (LineSet& p : raw_points) {
    std::sort(p.begin(), p.end());
    if (std::adjacent_find(p.begin(), p.end()) != p.end())
      throw Error(ErrorCode::BadIndex, "repeated line index in a point");
    if (p.size() < 3)
      throw Error(ErrorCode::PointTooSmall,
                  "stored points need >= 3 lines (double points are implicit)");
    if (p.front() < 1 || p.back() > n)
      throw Error(ErrorCode::BadIndex, "line index out of range 1..n");
  }
  std::sort(raw_points.begin(), raw_points.end());
  raw_points.erase(std::unique(raw_points.begin(), raw_points.end()), raw_points.end());

  LineCombinatorics c;
  c.n = n;
  c.points = std::move(raw_points);
  c.pair_pt.assign(n + 1, std::vector<int>(n + 1, -1));
  c.point_mask.resize(c.points.size());
  for (size_t pi = 0; pi < c.points.size(); ++pi) {
    const LineSet& p = c.points[pi];
    uint32_t mask = 0;
    for (int l : p) mask |= 1u << (l - 1);
    c.point_mask[pi] = mask;
    for (size_t a = 0; a < p.size(); ++a)
      for (size_t b = a + 1; b < p.size(); ++b) {
        int i = p[a], j = p[b];
        if (c.pair_pt[i][j] != -1)
          throw Error(ErrorCode::DuplicatePair,
                      "lines " + std::to_string(i) + "," + std::to_string(j) +
                          " lie on two stored points");
        c.pair_pt[i][j] = c.pair_pt[j][i] = static_cast<int>(pi);
      }
  }
  return c;
}

PointRef point_of(const LineCombinatorics& c, int i, int j) {
  assert(i != j && i >= 1 && j >= 1 && i <= c.n && j <= c.n);
  PointRef r;
  int idx = c.pair_pt[i][j];
  if (idx >= 0) {
    r.kind = PointRef::Kind::Stored;
    r.index = idx;
    r.i = std::min(i, j);
    r.j = std::max(i, j);
  } else {
    r.kind = PointRef::Kind::ImplicitDouble;
    r.i = std::min(i, j);
    r.j = std::max(i, j);
  }
  return r;
}

LineSet point_lines(const LineCombinatorics& c, const PointRef& p) {
  if (p.is_stored()) return c.points[p.index];
  return {p.i, p.j};
}

std::vector<LineSet> all_points(const LineCombinatorics& c) {
  std::vector<LineSet> out = c.points;
  for (int i = 1; i <= c.n; ++i)
    for (int j = i + 1; j <= c.n; ++j)
      if (c.pair_pt[i][j] < 0) out.push_back({i, j});
  return out;
}

Subcombinatorics restrict_to(const LineCombinatorics& c, const LineSet& support) {
  if (support.empty()) throw Error(ErrorCode::ValidationError, "empty support");
  Subcombinatorics sc;
  sc.parent = &c;
  sc.support = support;
  std::sort(sc.support.begin(), sc.support.end());
  std::vector<int> new_index(c.n + 1, 0);
  for (size_t k = 0; k < sc.support.size(); ++k) {
    int l = sc.support[k];
    assert(l >= 1 && l <= c.n);
    new_index[l] = static_cast<int>(k) + 1;
    sc.to_parent.push_back(l);
  }
  std::vector<LineSet> pts;
  for (const LineSet& p : c.points) {
    LineSet q;
    for (int l : p)
      if (new_index[l]) q.push_back(new_index[l]);
    if (q.size() >= 3) pts.push_back(q);  // induced multiplicity 2 -> implicit double
  }
  sc.induced = validate(static_cast<int>(sc.support.size()), std::move(pts));
  return sc;
}

namespace {

// per-line invariant: sorted multiplicities of the stored points through it
std::vector<std::vector<int>> line_profiles(const LineCombinatorics& c) {
  std::vector<std::vector<int>> prof(c.n + 1);
  for (const LineSet& p : c.points)
    for (int l : p) prof[l].push_back(static_cast<int>(p.size()));
  for (int l = 1; l <= c.n; ++l) std::sort(prof[l].begin(), prof[l].end());
  return prof;
}

bool full_point_check(const LineCombinatorics& a, const LineCombinatorics& b, const Perm& g) {
  std::set<LineSet> target(b.points.begin(), b.points.end());
  for (const LineSet& p : a.points) {
    LineSet img;
    for (int l : p) img.push_back(g[l - 1]);
    std::sort(img.begin(), img.end());
    if (!target.count(img)) return false;
  }
  return true;
}

void iso_backtrack(const LineCombinatorics& a, const LineCombinatorics& b,
                   const std::vector<std::vector<int>>& prof_a,
                   const std::vector<std::vector<int>>& prof_b, Perm& g, std::vector<bool>& used,
                   int next, bool all, std::vector<Perm>& out) {
  if (!all && !out.empty()) return;
  if (next > a.n) {
    if (full_point_check(a, b, g)) out.push_back(g);
    return;
  }
  for (int img = 1; img <= b.n; ++img) {
    if (used[img]) continue;
    if (prof_a[next] != prof_b[img]) continue;
    bool ok = true;
    for (int prev = 1; prev < next && ok; ++prev) {
      int pa = a.pair_pt[prev][next];
      int pb = b.pair_pt[g[prev - 1]][img];
      if ((pa < 0) != (pb < 0)) ok = false;
      else if (pa >= 0 && a.points[pa].size() != b.points[pb].size()) ok = false;
    }
    if (!ok) continue;
    g[next - 1] = img;
    used[img] = true;
    iso_backtrack(a, b, prof_a, prof_b, g, used, next + 1, all, out);
    used[img] = false;
  }
}

std::vector<Perm> isomorphisms(const LineCombinatorics& a, const LineCombinatorics& b, bool all) {
  std::vector<Perm> out;
  if (a.n != b.n || a.points.size() != b.points.size()) return out;
  auto prof_a = line_profiles(a), prof_b = line_profiles(b);
  {
    auto sa = prof_a, sb = prof_b;
    std::sort(sa.begin() + 1, sa.end());
    std::sort(sb.begin() + 1, sb.end());
    if (sa != sb) return out;
  }
  Perm g(a.n, 0);
  std::vector<bool> used(b.n + 1, false);
  iso_backtrack(a, b, prof_a, prof_b, g, used, 1, all, out);
  return out;
}

}  // namespace

std::vector<Perm> automorphisms(const LineCombinatorics& c) { return isomorphisms(c, c, true); }

std::optional<Perm> find_isomorphism(const LineCombinatorics& a, const LineCombinatorics& b) {
  auto v = isomorphisms(a, b, false);
  if (v.empty()) return std::nullopt;
  return v.front();
}

Perm compose(const Perm& f, const Perm& g) {
  assert(f.size() == g.size());
  Perm h(f.size());
  for (size_t i = 0; i < f.size(); ++i) h[i] = f[g[i] - 1];
  return h;
}

Perm inverse(const Perm& f) {
  Perm h(f.size());
  for (size_t i = 0; i < f.size(); ++i) h[f[i] - 1] = static_cast<int>(i) + 1;
  return h;
}

LineCombinatorics relabel(const LineCombinatorics& c, const Perm& g) {
  std::vector<LineSet> pts;
  for (const LineSet& p : c.points) {
    LineSet q;
    for (int l : p) q.push_back(g[l - 1]);
    pts.push_back(q);
  }
  return validate(c.n, pts);
}

}  // namespace linepencils
