#include "positroid/subdivision.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "positroid/cyclic.hpp"

namespace positroid {

namespace {

// Clockwise distance from a to b on the circle of n labels, in [0, n).
int cyc_dist(int a, int b, int n) { return ((b - a) % n + n) % n; }

std::vector<int> sorted_cycle(std::vector<int> vs, int n, const char* who) {
  std::sort(vs.begin(), vs.end());
  if (vs.size() < 3)
    throw std::invalid_argument(std::string(who) + ": polygon with fewer than 3 vertices");
  for (size_t i = 0; i < vs.size(); ++i) {
    if (vs[i] < 1 || vs[i] > n)
      throw std::invalid_argument(std::string(who) + ": vertex out of range");
    if (i && vs[i] == vs[i - 1])
      throw std::invalid_argument(std::string(who) + ": repeated vertex");
  }
  return vs;
}

// Two polygons inscribed in the circle have disjoint interiors iff one fits
// inside a single gap of the other, touching at most the gap's endpoints.
// Sharing both endpoints means sharing the chord between them as a side.
bool noncrossing(const std::vector<int>& P, const std::vector<int>& Q, int n,
                 bool allow_shared_side) {
  std::vector<int> shared, rest;
  for (int q : Q)
    (std::binary_search(P.begin(), P.end(), q) ? shared : rest).push_back(q);
  if (shared.size() >= 3) return false;
  if (rest.empty()) return false;  // contained or identical
  int m = static_cast<int>(P.size());
  int gap = -1;
  for (int t = 0; t < m; ++t) {
    CyclicInterval open_gap(cyclic_next(P[t], n), cyclic_prev(P[(t + 1) % m], n), n);
    if (cyc_dist(P[t], P[(t + 1) % m], n) <= 1) continue;  // empty gap
    bool all = true;
    for (int r : rest)
      if (!open_gap.contains(r)) all = false;
    if (all) {
      gap = t;
      break;
    }
  }
  if (gap < 0) return false;
  for (int s : shared)
    if (s != P[gap] && s != P[(gap + 1) % m]) return false;
  if (!allow_shared_side && shared.size() == 2) return false;
  return true;
}

// Regions of the n-gon cut by the given chords: traces the faces of the
// circle-plus-chords graph and returns each inner region's vertex set in
// ascending order.
std::vector<std::vector<int>> trace_regions(
    int n, const std::vector<std::pair<int, int>>& chords) {
  int walls = n + static_cast<int>(chords.size());
  auto ends = [&](int w) -> std::pair<int, int> {
    if (w < n) return {w + 1, cyclic_next(w + 1, n)};  // arc w: label w+1 ahead
    return chords[w - n];
  };
  std::vector<std::vector<int>> rot(n + 1);  // 1-based labels
  for (int v = 1; v <= n; ++v) rot[v].push_back(v - 1);  // arc ahead
  std::vector<int> order(chords.size());
  std::iota(order.begin(), order.end(), 0);
  for (int v = 1; v <= n; ++v) {
    std::vector<int> mine;
    for (size_t c = 0; c < chords.size(); ++c)
      if (chords[c].first == v || chords[c].second == v) mine.push_back(static_cast<int>(c));
    std::sort(mine.begin(), mine.end(), [&](int c1, int c2) {
      int u1 = chords[c1].first == v ? chords[c1].second : chords[c1].first;
      int u2 = chords[c2].first == v ? chords[c2].second : chords[c2].first;
      return cyc_dist(v, u1, n) < cyc_dist(v, u2, n);
    });
    for (int c : mine) rot[v].push_back(n + c);
    rot[v].push_back(cyclic_prev(v, n) - 1);  // arc behind
  }
  auto head = [&](int h) {
    auto [a, b] = ends(h / 2);
    return (h & 1) ? a : b;
  };
  auto from = [&](int w, int tail) {
    auto [a, b] = ends(w);
    if (a == tail) return 2 * w;
    if (b == tail) return 2 * w + 1;
    throw std::logic_error("trace_regions: bad wall");
  };
  std::vector<char> seen(2 * walls, 0);
  std::vector<std::vector<int>> regions;
  for (int h0 = 0; h0 < 2 * walls; ++h0) {
    if (seen[h0]) continue;
    std::vector<int> cyc;
    bool outer = false;
    int h = h0;
    do {
      seen[h] = 1;
      if (h == 0) outer = true;  // directed arc 1 -> 2 lies on the outer face
      int v = head(h);
      cyc.push_back(v);
      const auto& rv = rot[v];
      int p = -1;
      for (int i = 0; i < static_cast<int>(rv.size()); ++i)
        if (rv[i] == h / 2) p = i;
      h = from(rv[(p + 1) % rv.size()], v);
    } while (h != h0);
    if (outer) continue;
    std::sort(cyc.begin(), cyc.end());
    if (std::adjacent_find(cyc.begin(), cyc.end()) != cyc.end())
      throw std::logic_error("trace_regions: region revisits a vertex");
    regions.push_back(std::move(cyc));
  }
  return regions;
}

// Sides of a polygon given as an ascending cycle, as ordered vertex pairs in
// cycle order.
std::vector<std::pair<int, int>> poly_sides(const std::vector<int>& P) {
  std::vector<std::pair<int, int>> out;
  int m = static_cast<int>(P.size());
  for (int t = 0; t < m; ++t) out.push_back({P[t], P[(t + 1) % m]});
  return out;
}

bool is_circle_side(int u, int v, int n) {
  return cyclic_next(u, n) == v || cyclic_next(v, n) == u;
}

// Shared planar-dual builder: one internal vertex per polygon, an edge per
// side shared by two polygons, and a leg to boundary vertex i for the
// polygon side along circle side {i, i+1}. Rotations follow cycle order.
PlabicGraph build_dual(int n, const std::vector<std::vector<int>>& polys,
                       const std::vector<char>& black) {
  std::map<std::pair<int, int>, std::vector<int>> owners;  // side -> poly ids
  for (size_t p = 0; p < polys.size(); ++p)
    for (auto [u, v] : poly_sides(polys[p])) {
      if (u > v) std::swap(u, v);
      owners[{u, v}].push_back(static_cast<int>(p));
    }
  for (const auto& [side, who] : owners) {
    auto [u, v] = side;
    int want = is_circle_side(u, v, n) ? 1 : 2;
    if (static_cast<int>(who.size()) != want)
      throw std::invalid_argument(
          "build_dual: side covered the wrong number of times; polygons do "
          "not subdivide the disk");
  }
  PlabicGraph g(n);
  std::vector<int> vert(polys.size());
  for (size_t p = 0; p < polys.size(); ++p) vert[p] = g.add_internal(black[p]);
  std::map<std::pair<int, int>, int> chord_edge;
  for (size_t p = 0; p < polys.size(); ++p) {
    std::vector<int> order;
    for (auto [u, v] : poly_sides(polys[p])) {
      int a = std::min(u, v), b = std::max(u, v);
      if (is_circle_side(a, b, n)) {
        int i = cyclic_next(a, n) == b ? a : b;  // side {i, i+1}
        order.push_back(g.add_edge(i - 1, vert[p]));
      } else {
        auto it = chord_edge.find({a, b});
        if (it == chord_edge.end()) {
          const auto& who = owners.at({a, b});
          int other = who[0] == static_cast<int>(p) ? who[1] : who[0];
          int e = g.add_edge(vert[p], vert[other]);
          chord_edge[{a, b}] = e;
          order.push_back(e);
        } else {
          order.push_back(it->second);
        }
      }
    }
    g.set_rotation(vert[p], std::move(order));
  }
  g.check();
  return g;
}

}  // namespace

int BicoloredSubdivision::k() const {
  int total = 0;
  for (const auto& b : black) total += static_cast<int>(b.size()) - 2;
  return total;
}

BicoloredTriangulation make_triangulation(int n,
                                          std::vector<std::array<int, 3>> black) {
  if (n < 3) throw std::invalid_argument("make_triangulation: need n >= 3");
  for (auto& t : black) {
    std::sort(t.begin(), t.end());
    if (t[0] < 1 || t[2] > n || t[0] == t[1] || t[1] == t[2])
      throw std::invalid_argument("make_triangulation: bad triangle");
  }
  std::sort(black.begin(), black.end());
  for (size_t i = 0; i + 1 < black.size(); ++i)
    if (black[i] == black[i + 1])
      throw std::invalid_argument("make_triangulation: duplicate triangle");
  for (size_t i = 0; i < black.size(); ++i)
    for (size_t j = i + 1; j < black.size(); ++j) {
      std::vector<int> P(black[i].begin(), black[i].end());
      std::vector<int> Q(black[j].begin(), black[j].end());
      if (!noncrossing(P, Q, n, true))
        throw std::invalid_argument("make_triangulation: triangles cross");
    }
  return {n, std::move(black)};
}

BicoloredSubdivision make_subdivision(int n, std::vector<std::vector<int>> black) {
  if (n < 3) throw std::invalid_argument("make_subdivision: need n >= 3");
  for (auto& b : black) b = sorted_cycle(std::move(b), n, "make_subdivision");
  std::sort(black.begin(), black.end());
  for (size_t i = 0; i < black.size(); ++i)
    for (size_t j = i + 1; j < black.size(); ++j)
      if (!noncrossing(black[i], black[j], n, false))
        throw std::invalid_argument(
            "make_subdivision: black polygons cross or share a side");
  // The white regions are the complementary pieces.
  std::set<std::pair<int, int>> chord_set;
  for (const auto& b : black)
    for (auto [u, v] : poly_sides(b)) {
      if (u > v) std::swap(u, v);
      if (!is_circle_side(u, v, n)) chord_set.insert({u, v});
    }
  std::vector<std::pair<int, int>> chords(chord_set.begin(), chord_set.end());
  auto regions = trace_regions(n, chords);
  std::vector<std::vector<int>> white;
  std::set<std::vector<int>> black_sets(black.begin(), black.end());
  size_t found = 0;
  for (auto& r : regions) {
    if (black_sets.count(r))
      ++found;
    else
      white.push_back(std::move(r));
  }
  if (found != black.size())
    throw std::logic_error("make_subdivision: black polygon is not a region");
  std::sort(white.begin(), white.end());
  return {n, std::move(black), std::move(white)};
}

BicoloredSubdivision subdivision_of(const BicoloredTriangulation& t) {
  // Glue black triangles that share a side.
  int m = static_cast<int>(t.black.size());
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      int common = 0;
      for (int a : t.black[i])
        for (int b : t.black[j])
          if (a == b) ++common;
      if (common >= 2) parent[find(i)] = find(j);
    }
  std::map<int, std::set<int>> groups;
  for (int i = 0; i < m; ++i)
    groups[find(i)].insert(t.black[i].begin(), t.black[i].end());
  std::vector<std::vector<int>> black;
  for (auto& [root, vs] : groups) black.emplace_back(vs.begin(), vs.end());
  return make_subdivision(t.n, std::move(black));
}

BicoloredTriangulation canonical_triangulation(const BicoloredSubdivision& s) {
  std::vector<std::array<int, 3>> tris;
  for (const auto& b : s.black)
    for (size_t t = 1; t + 1 < b.size(); ++t)
      tris.push_back({b[0], b[t], b[t + 1]});
  return make_triangulation(s.n, std::move(tris));
}

BicoloredTriangulation rotated(const BicoloredTriangulation& t, int s) {
  std::vector<std::array<int, 3>> tris;
  for (const auto& tr : t.black)
    tris.push_back({mod1(tr[0] + s, t.n), mod1(tr[1] + s, t.n), mod1(tr[2] + s, t.n)});
  return make_triangulation(t.n, std::move(tris));
}

BicoloredSubdivision rotated(const BicoloredSubdivision& s, int shift) {
  std::vector<std::vector<int>> black;
  for (const auto& b : s.black) {
    std::vector<int> nb;
    for (int v : b) nb.push_back(mod1(v + shift, s.n));
    black.push_back(std::move(nb));
  }
  return make_subdivision(s.n, std::move(black));
}

PlabicGraph dual_tree(const BicoloredSubdivision& s) {
  std::vector<std::vector<int>> polys;
  std::vector<char> color;
  for (const auto& b : s.black) {
    polys.push_back(b);
    color.push_back(1);
  }
  for (const auto& w : s.white) {
    polys.push_back(w);
    color.push_back(0);
  }
  PlabicGraph g = build_dual(s.n, polys, color);
  if (static_cast<int>(g.edges.size()) != static_cast<int>(g.verts.size()) - 1)
    throw std::logic_error("dual_tree: dual graph is not a tree");
  return g;
}

PlabicGraph triangulated_dual(const BicoloredTriangulation& t) {
  BicoloredSubdivision s = subdivision_of(t);
  std::vector<std::vector<int>> polys;
  std::vector<char> color;
  for (const auto& tr : t.black) {
    polys.push_back({tr[0], tr[1], tr[2]});
    color.push_back(1);
  }
  for (const auto& w : s.white) {
    polys.push_back(w);
    color.push_back(0);
  }
  return build_dual(t.n, polys, color);
}

PlabicGraph ghat_of_triangulation(const BicoloredTriangulation& t) {
  int n = t.n;
  PlabicGraph g(n);
  std::vector<int> corner(n + 1);
  for (int i = 1; i <= n; ++i) corner[i] = g.add_internal(true);
  std::vector<int> stub(n + 1);
  for (int i = 1; i <= n; ++i) stub[i] = g.add_edge(i - 1, corner[i]);
  // One trivalent white vertex per black triangle, spokes to the corners in
  // ascending order (clockwise around the triangle's center).
  std::vector<std::array<int, 3>> spokes(t.black.size());
  for (size_t r = 0; r < t.black.size(); ++r) {
    int w = g.add_internal(false);
    for (int s = 0; s < 3; ++s) spokes[r][s] = g.add_edge(w, corner[t.black[r][s]]);
  }
  // At a polygon corner the clockwise order starts at the outward stub and
  // sweeps the interior from the side facing i+1 around to the side facing
  // i-1; triangles at the corner are ordered by how close their far side
  // starts to i+1.
  for (int i = 1; i <= n; ++i) {
    std::vector<std::pair<int, int>> at;  // (sector key, spoke edge)
    for (size_t r = 0; r < t.black.size(); ++r)
      for (int s = 0; s < 3; ++s)
        if (t.black[r][s] == i) {
          int key = t.n;
          for (int x : t.black[r])
            if (x != i) key = std::min(key, cyc_dist(i, x, n));
          at.push_back({key, spokes[r][s]});
        }
    std::sort(at.begin(), at.end());
    std::vector<int> order{stub[i]};
    for (auto& [key, e] : at) order.push_back(e);
    g.set_rotation(corner[i], std::move(order));
  }
  g.check();
  return g;
}

ArcStats arc_stats(const BicoloredTriangulation& t, int h, int j) {
  if (h < 1 || h > t.n || j < 1 || j > t.n || h == j)
    throw std::invalid_argument("arc_stats: arc ends must be distinct circle vertices");
  BicoloredSubdivision s = subdivision_of(t);
  ArcStats out;
  for (const auto& p : s.black)
    if (std::binary_search(p.begin(), p.end(), h) &&
        std::binary_search(p.begin(), p.end(), j))
      out.compatible = true;
  for (const auto& p : s.white)
    if (std::binary_search(p.begin(), p.end(), h) &&
        std::binary_search(p.begin(), p.end(), j))
      out.compatible = true;
  // Number of black triangles left of the arc: each black polygon's part
  // inside the closed interval [h, j] triangulates into (vertices there - 2)
  // triangles.
  CyclicInterval left(h, j, t.n);
  for (const auto& p : s.black) {
    int inside = 0;
    for (int v : p)
      if (left.contains(v)) ++inside;
    out.area += std::max(0, inside - 2);
  }
  for (const auto& tr : t.black) {
    bool has_h = false, has_j = false;
    for (int x : tr) {
      if (x == h) has_h = true;
      if (x == j) has_j = true;
    }
    if (has_h && has_j) out.black_arc = true;
  }
  // Facet-defining: some black polygon contains both ends and lies entirely
  // on one side of the arc.
  CyclicInterval open_hj(cyclic_next(h, t.n), cyclic_prev(j, t.n), t.n);
  CyclicInterval open_jh(cyclic_next(j, t.n), cyclic_prev(h, t.n), t.n);
  for (const auto& p : s.black) {
    if (!std::binary_search(p.begin(), p.end(), h) ||
        !std::binary_search(p.begin(), p.end(), j))
      continue;
    bool in_hj = true, in_jh = true;
    for (int v : p) {
      if (v == h || v == j) continue;
      if (cyc_dist(h, j, t.n) <= 1 || !open_hj.contains(v)) in_hj = false;
      if (cyc_dist(j, h, t.n) <= 1 || !open_jh.contains(v)) in_jh = false;
    }
    if (in_hj || in_jh) out.facet_defining = true;
  }
  return out;
}

std::vector<BicoloredSubdivision> enumerate_subdivisions(int k, int n) {
  if (n < 3 || k < 0 || k > n - 2)
    throw std::invalid_argument("enumerate_subdivisions: need 0 <= k <= n-2");
  if (n > 20)
    throw std::invalid_argument("enumerate_subdivisions: n too large");
  // Candidate black polygons, lexicographically ordered.
  std::vector<std::vector<int>> cand;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    int sz = __builtin_popcount(mask);
    if (sz < 3 || sz - 2 > k) continue;
    std::vector<int> p;
    for (int v = 1; v <= n; ++v)
      if (mask & (1u << (v - 1))) p.push_back(v);
    cand.push_back(std::move(p));
  }
  std::sort(cand.begin(), cand.end());
  int m = static_cast<int>(cand.size());
  std::vector<std::vector<char>> ok(m, std::vector<char>(m, 0));
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      ok[i][j] = ok[j][i] = noncrossing(cand[i], cand[j], n, false);

  std::vector<BicoloredSubdivision> out;
  std::vector<int> chosen;
  std::function<void(int, int)> rec = [&](int start, int budget) {
    if (budget == 0) {
      std::vector<std::vector<int>> blacks;
      for (int c : chosen) blacks.push_back(cand[c]);
      out.push_back(make_subdivision(n, std::move(blacks)));
      return;
    }
    for (int c = start; c < m; ++c) {
      int w = static_cast<int>(cand[c].size()) - 2;
      if (w > budget) continue;
      bool fits = true;
      for (int prev : chosen)
        if (!ok[prev][c]) fits = false;
      if (!fits) continue;
      chosen.push_back(c);
      rec(c + 1, budget - w);
      chosen.pop_back();
    }
  };
  rec(0, k);
  return out;
}

Kermit kermit(const std::vector<int>& I, int n) {
  std::vector<int> sorted = I;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.size() != I.size())
    throw std::invalid_argument("kermit: repeated index");
  for (int i : sorted)
    if (i < 2 || i > n - 1)
      throw std::invalid_argument("kermit: indices must lie in [2, n-1]");
  std::vector<std::array<int, 3>> tris;
  for (int i : sorted) tris.push_back({1, i, i + 1});
  Kermit out;
  out.tri = make_triangulation(n, std::move(tris));
  out.K = ghat_of_triangulation(out.tri);
  out.C = dual_tree(subdivision_of(out.tri));
  return out;
}

}  // namespace positroid
