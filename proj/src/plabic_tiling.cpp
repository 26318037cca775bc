#include "positroid/plabic_tiling.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "positroid/cyclic.hpp"

namespace positroid {

PlabicTiling tiling_of_graph(const PlabicGraph& g) {
  g.check();
  int E = static_cast<int>(g.edges.size());
  DiskFaces df = disk_faces(g);
  auto from = [&](int e, int tail) {
    if (e < E) return 2 * e + (g.edges[e].a == tail ? 0 : 1);
    return 2 * e + (e - E == tail ? 0 : 1);
  };

  // Name the inner faces: the face on the inner side of the rim arc between
  // boundary vertices r and r+1 is circle vertex r+2 (1-based); the rest are
  // punctures.
  std::vector<int> label(df.orbits.size(), -1);
  for (int r = 0; r < g.n; ++r) {
    int f = df.face_of[from(E + r, (r + 1) % g.n)];
    if (f == df.outer)
      throw std::logic_error("tiling_of_graph: rim arc faces outward");
    if (label[f] != -1)
      throw std::invalid_argument(
          "tiling_of_graph: two circle vertices share a face; the internal "
          "part of the graph is not connected");
    label[f] = (r + 1) % g.n + 1;
  }
  PlabicTiling t;
  t.n = g.n;
  for (int f = 0; f < static_cast<int>(df.orbits.size()); ++f)
    if (f != df.outer && label[f] == -1) label[f] = g.n + ++t.punctures;

  for (int v = g.n; v < static_cast<int>(g.verts.size()); ++v) {
    std::vector<int> cyc;
    for (int e : g.verts[v].rot) {
      int f = df.face_of[from(e, g.other_end(e, v))];
      if (f == df.outer)
        throw std::logic_error("tiling_of_graph: corner in outer face");
      cyc.push_back(label[f]);
    }
    std::vector<int> dedup = cyc;
    std::sort(dedup.begin(), dedup.end());
    if (std::adjacent_find(dedup.begin(), dedup.end()) != dedup.end())
      throw std::invalid_argument(
          "tiling_of_graph: polygon revisits a face (graph has a bridge "
          "between internal vertices)");
    t.polys.push_back(std::move(cyc));
    t.black.push_back(g.verts[v].black);
  }
  return t;
}

int tiling_area(const PlabicTiling& t) {
  int area = 0;
  for (size_t p = 0; p < t.polys.size(); ++p)
    if (t.black[p]) area += std::max(0, static_cast<int>(t.polys[p].size()) - 2);
  return area;
}

ArcStats arc_stats(const PlabicTiling& t, int h, int j) {
  if (h < 1 || h > t.n || j < 1 || j > t.n || h == j)
    throw std::invalid_argument("arc_stats: arc ends must be distinct circle vertices");
  ArcStats out;
  auto has = [&](const std::vector<int>& cyc, int x) {
    return std::find(cyc.begin(), cyc.end(), x) != cyc.end();
  };
  int split = -1;
  for (size_t p = 0; p < t.polys.size(); ++p) {
    if (!has(t.polys[p], h) || !has(t.polys[p], j)) continue;
    out.compatible = true;
    if (split < 0 || (t.black[p] && !t.black[split])) split = static_cast<int>(p);
    int len = static_cast<int>(t.polys[p].size());
    for (int s = 0; s < len; ++s) {
      int a = t.polys[p][s], b = t.polys[p][(s + 1) % len];
      if ((a == h && b == j) || (a == j && b == h)) {
        out.facet_defining = out.facet_defining || t.black[p];
        out.black_arc = out.black_arc || (t.black[p] && len == 3);
      }
    }
  }
  if (!out.compatible) return out;

  // Split the chosen polygon along the arc: the clockwise walk from h to j
  // is the part weakly left of h -> j.
  std::set<int> left_punc;
  const auto& cyc = t.polys[split];
  int len = static_cast<int>(cyc.size());
  int pos = static_cast<int>(std::find(cyc.begin(), cyc.end(), h) - cyc.begin());
  int path = 1;
  while (cyc[pos] != j) {
    pos = (pos + 1) % len;
    ++path;
    if (cyc[pos] > t.n) left_punc.insert(cyc[pos]);
  }
  if (t.black[split]) out.area += std::max(0, path - 2);

  // Whole polygons on the left: every circle vertex in the closed interval
  // [h, j]. A polygon bounded by the arc itself sits left exactly when its
  // clockwise cycle crosses from j to h (interior right of the directed
  // boundary walk).
  CyclicInterval closed(h, j, t.n);
  for (size_t p = 0; p < t.polys.size(); ++p) {
    if (static_cast<int>(p) == split) continue;
    bool any_circle = false, inside = true;
    for (int x : t.polys[p])
      if (x <= t.n) {
        any_circle = true;
        if (!closed.contains(x)) inside = false;
      }
    if (!any_circle || !inside) continue;
    if (has(t.polys[p], h) && has(t.polys[p], j)) {
      int plen = static_cast<int>(t.polys[p].size());
      bool j_to_h = false;
      for (int s = 0; s < plen; ++s)
        if (t.polys[p][s] == j && t.polys[p][(s + 1) % plen] == h) j_to_h = true;
      if (!j_to_h) continue;
    }
    if (t.black[p])
      out.area += std::max(0, static_cast<int>(t.polys[p].size()) - 2);
    for (int x : t.polys[p])
      if (x > t.n) left_punc.insert(x);
  }
  out.punc = static_cast<int>(left_punc.size());
  return out;
}

}  // namespace positroid
