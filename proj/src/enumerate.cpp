#include "linepencils/enumerate.hpp"

#include <omp.h>

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <set>

#include "linepencils/linalg.hpp"

namespace linepencils {

namespace {

LineSet mask_to_lines(uint32_t mask) {
  LineSet out;
  for (int i = 0; mask; ++i, mask >>= 1)
    if (mask & 1) out.push_back(i + 1);
  return out;
}

// evaluate one candidate support: all chi-subsets of its induced
// multiplicity->=3 points, with covering and fiber checks
void scan_support(const LineCombinatorics& c, uint32_t smask, const EnumerateOptions& opts,
                  std::vector<CombinatorialPencil>& out) {
  // induced points of multiplicity >= 3 (these are the only base candidates)
  std::vector<uint32_t> tmask;
  std::vector<LineSet> tlines;
  for (size_t pi = 0; pi < c.points.size(); ++pi) {
    uint32_t im = c.point_mask[pi] & smask;
    if (__builtin_popcount(im) >= 3) {
      tmask.push_back(im);
      tlines.push_back(mask_to_lines(im));
    }
  }
  const int nt = static_cast<int>(tmask.size());
  if (nt < 4) return;
  // a support line on fewer than two candidate points can never be covered
  uint32_t cover1 = 0, cover2 = 0;
  for (uint32_t tm : tmask) {
    cover2 |= cover1 & tm;
    cover1 |= tm;
  }
  if ((smask & ~cover2) != 0) return;

  LineSet support = mask_to_lines(smask);
  for (uint32_t sub = 0; sub < (1u << nt); ++sub) {
    if (__builtin_popcount(sub) < 4) continue;
    uint32_t c1 = 0, c2 = 0;
    for (int t = 0; t < nt; ++t)
      if (sub & (1u << t)) {
        c2 |= c1 & tmask[t];
        c1 |= tmask[t];
      }
    if ((smask & ~c2) != 0) continue;  // some line on < 2 base points

    std::vector<LineSet> chi;
    for (int t = 0; t < nt; ++t)
      if (sub & (1u << t)) chi.push_back(tlines[t]);

    // fiber partition: union lines meeting outside chi
    std::set<LineSet> chi_set(chi.begin(), chi.end());
    const int m = static_cast<int>(support.size());
    std::vector<int> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    std::vector<int> pos(c.n + 1, -1);
    for (int a = 0; a < m; ++a) pos[support[a]] = a;
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b) {
        int idx = c.pair_pt[support[a]][support[b]];
        bool in_chi;
        if (idx < 0) {
          in_chi = false;  // implicit doubles are never base points
        } else {
          uint32_t im = c.point_mask[idx] & smask;
          in_chi = __builtin_popcount(im) >= 3 && chi_set.count(mask_to_lines(im)) > 0;
        }
        if (!in_chi) parent[find(a)] = find(b);
      }
    std::map<int, LineSet> comps;
    for (int a = 0; a < m; ++a) comps[find(a)].push_back(support[a]);
    if (static_cast<int>(comps.size()) < 3 || static_cast<int>(comps.size()) > opts.max_fibers)
      continue;
    std::vector<LineSet> fibers;
    for (auto& [root, lines] : comps) fibers.push_back(lines);
    std::sort(fibers.begin(), fibers.end(),
              [](const LineSet& x, const LineSet& y) { return x.front() < y.front(); });

    auto pencil = pencil_for_partition(c, support, chi, fibers, opts.max_fibers);
    if (pencil) out.push_back(std::move(*pencil));
  }
}

std::vector<CombinatorialPencil> finalize(const LineCombinatorics& c,
                                          std::vector<CombinatorialPencil> found,
                                          const EnumerateOptions& opts) {
  for (size_t pi = 0; pi < c.points.size(); ++pi)
    if (static_cast<int>(c.points[pi].size()) <= opts.max_fibers)
      found.push_back(point_type_pencil(c, static_cast<int>(pi)));
  // dedupe by class
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end(),
                          [](const CombinatorialPencil& a, const CombinatorialPencil& b) {
                            return a.class_matrix == b.class_matrix;
                          }),
              found.end());
  if (!opts.include_nonmaximal) found = maximality_filter(std::move(found));
  std::sort(found.begin(), found.end());
  return found;
}

void check_bound(const LineCombinatorics& c, const EnumerateOptions& opts) {
  if (c.n > opts.max_lines)
    throw Error(ErrorCode::SearchBoundExceeded,
                "n = " + std::to_string(c.n) + " exceeds the configured bound " +
                    std::to_string(opts.max_lines));
  if (c.n > 31 || c.points.size() > 25)
    throw Error(ErrorCode::SearchBoundExceeded, "candidate space too large");
}

}  // namespace

std::vector<CombinatorialPencil> maximality_filter(std::vector<CombinatorialPencil> pencils) {
  std::vector<RatMat> spaces;
  spaces.reserve(pencils.size());
  for (const auto& p : pencils) spaces.push_back(to_rational(p.class_matrix));
  std::vector<bool> keep(pencils.size(), true);
  for (size_t a = 0; a < pencils.size(); ++a)
    for (size_t b = 0; b < pencils.size(); ++b) {
      if (a == b || !keep[a]) continue;
      if (pencils[a].k() >= pencils[b].k()) continue;  // strict containment needs lower rank
      if (rowspace_contains(spaces[b], spaces[a])) {
        keep[a] = false;
        break;
      }
    }
  std::vector<CombinatorialPencil> out;
  for (size_t a = 0; a < pencils.size(); ++a)
    if (keep[a]) out.push_back(std::move(pencils[a]));
  return out;
}

std::vector<CombinatorialPencil> enumerate_pencils_serial(const LineCombinatorics& c,
                                                          const EnumerateOptions& opts) {
  check_bound(c, opts);
  std::vector<CombinatorialPencil> found;
  const uint32_t full = c.full_mask();
  for (uint32_t smask = 0; smask <= full; ++smask) {
    if (__builtin_popcount(smask) < 6) continue;
    scan_support(c, smask, opts, found);
  }
  return finalize(c, std::move(found), opts);
}

std::vector<CombinatorialPencil> enumerate_pencils(const LineCombinatorics& c,
                                                   const EnumerateOptions& opts) {
  check_bound(c, opts);
  std::vector<CombinatorialPencil> found;
  const int64_t full = c.full_mask();
#pragma omp parallel
  {
    std::vector<CombinatorialPencil> local;
#pragma omp for schedule(dynamic, 64)
    for (int64_t smask = 0; smask <= full; ++smask) {
      if (__builtin_popcount(static_cast<uint32_t>(smask)) < 6) continue;
      scan_support(c, static_cast<uint32_t>(smask), opts, local);
    }
#pragma omp critical
    found.insert(found.end(), std::make_move_iterator(local.begin()),
                 std::make_move_iterator(local.end()));
  }
  return finalize(c, std::move(found), opts);
}

namespace {

// DFS state for the exhaustive three-fiber oracle
struct OracleDfs {
  const LineCombinatorics& c;
  std::vector<uint32_t> fiber_mask;  // three fibers
  uint32_t excluded = 0;
  std::vector<uint32_t> double_adj;  // per line, lines meeting it at a double
  std::vector<CombinatorialPencil> found;

  explicit OracleDfs(const LineCombinatorics& cc) : c(cc), fiber_mask(3, 0), double_adj(cc.n + 1, 0) {
    for (int i = 1; i <= c.n; ++i)
      for (int j = 1; j <= c.n; ++j)
        if (i != j && c.pair_pt[i][j] < 0) double_adj[i] |= 1u << (j - 1);
  }

  void leaf() {
    uint32_t smask = fiber_mask[0] | fiber_mask[1] | fiber_mask[2];
    if (!fiber_mask[0] || !fiber_mask[1] || !fiber_mask[2]) return;
    // classify stored points; doubles were kept intra-fiber during the DFS
    std::vector<LineSet> chi;
    for (size_t pi = 0; pi < c.points.size(); ++pi) {
      uint32_t im = c.point_mask[pi] & smask;
      int cnt = __builtin_popcount(im);
      if (cnt < 2) continue;
      int hit = 0;
      for (int t = 0; t < 3; ++t)
        if (im & fiber_mask[t]) ++hit;
      if (hit == 1) continue;        // inside one fiber
      if (hit != 3 || cnt < 3) return;  // must meet all fibers
      chi.push_back(mask_to_lines(im));
    }
    if (chi.empty()) return;
    LineSet support = mask_to_lines(smask);
    std::vector<LineSet> fibers = {mask_to_lines(fiber_mask[0]), mask_to_lines(fiber_mask[1]),
                                   mask_to_lines(fiber_mask[2])};
    std::sort(fibers.begin(), fibers.end(),
              [](const LineSet& x, const LineSet& y) { return x.front() < y.front(); });
    if (chi.size() == 1) {
      // a lone base point only carries the all-singleton partition of the
      // full stored point, so only triples appear in the three-fiber slice
      int idx = c.pair_pt[chi[0][0]][chi[0][1]];
      if (idx < 0 || c.points[idx] != chi[0]) return;
      if (mask_to_lines(smask) != chi[0] || chi[0].size() != 3) return;
      found.push_back(point_type_pencil(c, idx));
      return;
    }
    // partitions must match the base-point graph (canonical pencils only)
    std::set<LineSet> chi_set(chi.begin(), chi.end());
    {
      const int m = static_cast<int>(support.size());
      std::vector<int> parent(m);
      std::iota(parent.begin(), parent.end(), 0);
      auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
      };
      std::vector<int> posn(c.n + 1, -1);
      for (int a = 0; a < m; ++a) posn[support[a]] = a;
      for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
          int idx = c.pair_pt[support[a]][support[b]];
          bool in_chi = false;
          if (idx >= 0) {
            uint32_t im = c.point_mask[idx] & smask;
            in_chi = __builtin_popcount(im) >= 3 && chi_set.count(mask_to_lines(im)) > 0;
          }
          if (!in_chi) parent[find(a)] = find(b);
        }
      std::set<int> roots;
      for (int a = 0; a < m; ++a) roots.insert(find(a));
      if (roots.size() != 3) return;
      std::map<int, LineSet> comps;
      for (int a = 0; a < m; ++a) comps[find(a)].push_back(support[a]);
      std::vector<LineSet> graph_fibers;
      for (auto& [r, ls] : comps) graph_fibers.push_back(ls);
      std::sort(graph_fibers.begin(), graph_fibers.end(),
                [](const LineSet& x, const LineSet& y) { return x.front() < y.front(); });
      if (graph_fibers != fibers) return;
    }
    auto pencil = pencil_for_partition(c, support, chi, fibers, 3);
    if (pencil) found.push_back(std::move(*pencil));
  }

  // completed stored points must be intra-fiber or see all three fibers
  bool completed_point_ok(int line) {
    uint32_t assigned = fiber_mask[0] | fiber_mask[1] | fiber_mask[2] | excluded;
    for (size_t pi = 0; pi < c.points.size(); ++pi) {
      uint32_t pm = c.point_mask[pi];
      if (!(pm & (1u << (line - 1)))) continue;
      if ((pm & assigned) != pm) continue;  // not complete yet
      uint32_t im = pm & ~excluded;
      if (__builtin_popcount(im) < 2) continue;
      int hit = 0;
      for (int t = 0; t < 3; ++t)
        if (im & fiber_mask[t]) ++hit;
      if (hit == 2) return false;
      if (hit == 3 && __builtin_popcount(im) < 3) return false;
    }
    return true;
  }

  void dfs(int line, int used_fibers) {
    if (line > c.n) {
      if (used_fibers == 3) leaf();
      return;
    }
    // canonical labeling: a new fiber may open only in order
    int options = std::min(used_fibers + 1, 3);
    for (int t = 0; t < options; ++t) {
      // a double point between different fibers is never legal
      uint32_t others = 0;
      for (int s = 0; s < 3; ++s)
        if (s != t) others |= fiber_mask[s];
      if (double_adj[line] & others) continue;
      fiber_mask[t] |= 1u << (line - 1);
      if (completed_point_ok(line)) dfs(line + 1, std::max(used_fibers, t + 1));
      fiber_mask[t] &= ~(1u << (line - 1));
    }
    excluded |= 1u << (line - 1);
    if (completed_point_ok(line)) dfs(line + 1, used_fibers);
    excluded &= ~(1u << (line - 1));
  }
};

}  // namespace

std::vector<CombinatorialPencil> oracle_enumerate_3pencils(const LineCombinatorics& c) {
  if (c.n > 12)
    throw Error(ErrorCode::SearchBoundExceeded, "oracle is bounded to n <= 12");
  OracleDfs dfs(c);
  dfs.dfs(1, 0);
  std::sort(dfs.found.begin(), dfs.found.end());
  dfs.found.erase(std::unique(dfs.found.begin(), dfs.found.end(),
                              [](const CombinatorialPencil& a, const CombinatorialPencil& b) {
                                return a.class_matrix == b.class_matrix;
                              }),
                  dfs.found.end());
  return dfs.found;
}

}  // namespace linepencils
