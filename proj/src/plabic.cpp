#include "positroid/plabic.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace positroid {

namespace {

// Directed half-edge encoding: 2*e, heading from edges[e].a to edges[e].b,
// and 2*e+1 for the reverse.
int he_forward(int e) { return 2 * e; }
int he_head(const PlabicGraph& g, int h) {
  const auto& ed = g.edges[h / 2];
  return (h & 1) ? ed.a : ed.b;
}
int he_tail(const PlabicGraph& g, int h) {
  const auto& ed = g.edges[h / 2];
  return (h & 1) ? ed.b : ed.a;
}
int he_from(const PlabicGraph& g, int e, int tail) {
  return 2 * e + (g.edges[e].a == tail ? 0 : 1);
}

// Drops dead vertices and edges, renumbering the survivors in order.
// Boundary vertices must all survive.
PlabicGraph compact(const PlabicGraph& g, const std::vector<char>& vdead,
                    const std::vector<char>& edead) {
  PlabicGraph out(g.n);
  std::vector<int> vmap(g.verts.size(), -1), emap(g.edges.size(), -1);
  for (int v = 0; v < g.n; ++v) {
    if (vdead[v]) throw std::logic_error("compact: boundary vertex dropped");
    vmap[v] = v;
  }
  for (int v = g.n; v < static_cast<int>(g.verts.size()); ++v)
    if (!vdead[v]) vmap[v] = out.add_internal(g.verts[v].black);
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e)
    if (!edead[e])
      emap[e] = out.add_edge(vmap[g.edges[e].a], vmap[g.edges[e].b]);
  for (int v = 0; v < static_cast<int>(g.verts.size()); ++v) {
    if (vdead[v]) continue;
    std::vector<int> rot;
    rot.reserve(g.verts[v].rot.size());
    for (int e : g.verts[v].rot)
      if (!edead[e]) rot.push_back(emap[e]);
    out.set_rotation(vmap[v], std::move(rot));
  }
  return out;
}

std::vector<int> edges_between(const PlabicGraph& g, int u, int v) {
  std::vector<int> out;
  for (int e : g.verts[u].rot)
    if (g.other_end(e, u) == v) out.push_back(e);
  return out;
}

}  // namespace

PlabicGraph::PlabicGraph(int n_boundary) : n(n_boundary) {
  if (n_boundary <= 0)
    throw std::invalid_argument("PlabicGraph: need at least one boundary vertex");
  verts.resize(n);
}

int PlabicGraph::add_internal(bool is_black) {
  Vertex v;
  v.internal = true;
  v.black = is_black;
  verts.push_back(std::move(v));
  return static_cast<int>(verts.size()) - 1;
}

int PlabicGraph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= static_cast<int>(verts.size()) ||
      v >= static_cast<int>(verts.size()))
    throw std::invalid_argument("PlabicGraph::add_edge: vertex out of range");
  if (u == v)
    throw std::invalid_argument("PlabicGraph::add_edge: self-loops not allowed");
  int e = static_cast<int>(edges.size());
  edges.push_back({u, v});
  verts[u].rot.push_back(e);
  verts[v].rot.push_back(e);
  return e;
}

void PlabicGraph::set_rotation(int v, std::vector<int> order) {
  auto sorted_old = verts[v].rot;
  auto sorted_new = order;
  std::sort(sorted_old.begin(), sorted_old.end());
  std::sort(sorted_new.begin(), sorted_new.end());
  if (sorted_old != sorted_new)
    throw std::invalid_argument(
        "PlabicGraph::set_rotation: order is not a permutation of the incident edges");
  verts[v].rot = std::move(order);
}

int PlabicGraph::other_end(int e, int v) const {
  const Edge& ed = edges[e];
  if (ed.a == v) return ed.b;
  if (ed.b == v) return ed.a;
  throw std::invalid_argument("PlabicGraph::other_end: vertex not on edge");
}

int PlabicGraph::rot_index(int v, int e) const {
  const auto& r = verts[v].rot;
  for (int i = 0; i < static_cast<int>(r.size()); ++i)
    if (r[i] == e) return i;
  throw std::invalid_argument("PlabicGraph::rot_index: edge not at vertex");
}

int PlabicGraph::internal_count() const {
  return static_cast<int>(verts.size()) - n;
}

int PlabicGraph::white_count() const {
  int c = 0;
  for (int v = n; v < static_cast<int>(verts.size()); ++v)
    if (!verts[v].black) ++c;
  return c;
}

int PlabicGraph::black_count() const {
  return internal_count() - white_count();
}

int PlabicGraph::face_count() const {
  // Euler count for the disk: the graph together with the n boundary arcs is
  // connected (check() guarantees every piece touches the boundary), so the
  // number of regions is E' - V + 1 with E' = edges + arcs.
  return static_cast<int>(edges.size()) + n -
         static_cast<int>(verts.size()) + 1;
}

void PlabicGraph::check(bool forbid_stray_leaves) const {
  if (n <= 0) throw std::invalid_argument("PlabicGraph: empty boundary");
  std::vector<int> seen(edges.size(), 0);
  for (int v = 0; v < static_cast<int>(verts.size()); ++v) {
    if (v < n && verts[v].internal)
      throw std::invalid_argument("PlabicGraph: boundary vertex marked internal");
    if (v >= n && !verts[v].internal)
      throw std::invalid_argument("PlabicGraph: internal vertex marked boundary");
    if (v < n && verts[v].rot.size() != 1)
      throw std::invalid_argument("PlabicGraph: boundary vertex degree != 1");
    for (int e : verts[v].rot) {
      if (e < 0 || e >= static_cast<int>(edges.size()))
        throw std::invalid_argument("PlabicGraph: rotation lists unknown edge");
      if (edges[e].a != v && edges[e].b != v)
        throw std::invalid_argument("PlabicGraph: rotation lists foreign edge");
      ++seen[e];
    }
  }
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    if (edges[e].a == edges[e].b)
      throw std::invalid_argument("PlabicGraph: self-loop");
    if (seen[e] != 2)
      throw std::invalid_argument("PlabicGraph: edge not in both rotation lists");
  }
  // Everything must reach the boundary.
  std::vector<char> reach(verts.size(), 0);
  std::queue<int> q;
  for (int v = 0; v < n; ++v) {
    reach[v] = 1;
    q.push(v);
  }
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int e : verts[v].rot) {
      int u = other_end(e, v);
      if (!reach[u]) {
        reach[u] = 1;
        q.push(u);
      }
    }
  }
  for (int v = n; v < static_cast<int>(verts.size()); ++v)
    if (!reach[v])
      throw std::invalid_argument("PlabicGraph: internal vertex cut off from boundary");
  if (forbid_stray_leaves) {
    for (int v = n; v < static_cast<int>(verts.size()); ++v) {
      if (verts[v].rot.size() != 1) continue;
      // A leaf is fine only as the tip of a lollipop: walking away from it
      // through degree-2 vertices must reach the boundary.
      int prev = v, cur = other_end(verts[v].rot[0], v);
      while (cur >= n && verts[cur].rot.size() == 2) {
        int nxt = -1;
        for (int e : verts[cur].rot) {
          int u = other_end(e, cur);
          if (u != prev) nxt = u;
        }
        if (nxt < 0) break;  // parallel edges back; treated as stray
        prev = cur;
        cur = nxt;
      }
      if (cur >= n)
        throw std::invalid_argument("PlabicGraph: internal leaf is not a lollipop");
    }
  }
}

DecoratedPermutation trip_permutation(const PlabicGraph& g, bool assert_reduced) {
  g.check(false);
  std::vector<int> images(g.n, 0);
  std::vector<int> loops, coloops;
  std::vector<char> visited(2 * g.edges.size());
  for (int i = 0; i < g.n; ++i) {
    std::fill(visited.begin(), visited.end(), 0);
    int h = he_from(g, g.verts[i].rot[0], i);
    visited[h] = 1;
    int first_bounce = -1;  // vertex where the walk first turned around
    while (true) {
      int v = he_head(g, h);
      if (g.is_boundary(v)) {
        images[i] = v + 1;
        break;
      }
      int d = g.degree(v);
      int p = g.rot_index(v, h / 2);
      int exit = g.verts[v].black ? (p + d - 1) % d : (p + 1) % d;
      int e = g.verts[v].rot[exit];
      if (e == h / 2 && first_bounce < 0) first_bounce = v;
      int nh = he_from(g, e, v);
      if (visited[nh])
        throw std::runtime_error(
            "trip_permutation: walk revisits a directed half-edge; graph is malformed");
      visited[nh] = 1;
      h = nh;
    }
    if (images[i] == i + 1) {
      if (first_bounce < 0)
        throw std::logic_error("trip_permutation: fixed trip without a turnaround");
      (g.verts[first_bounce].black ? loops : coloops).push_back(i + 1);
    }
  }
  DecoratedPermutation pi(images, loops, coloops);
  if (assert_reduced) {
    int dim = to_affine(pi).cell_dimension();
    if (g.face_count() != dim + 1)
      throw std::runtime_error(
          "trip_permutation: face count does not match the cell dimension; "
          "graph is not reduced");
  }
  return pi;
}

PlabicGraph square_move(const PlabicGraph& g, const std::array<int, 4>& quad) {
  for (int v : quad) {
    if (v < g.n || v >= static_cast<int>(g.verts.size()))
      throw std::invalid_argument("square_move: vertex not internal");
    if (g.degree(v) != 3)
      throw std::invalid_argument("square_move: vertex not trivalent");
  }
  bool c0 = g.verts[quad[0]].black;
  if (g.verts[quad[1]].black == c0 || g.verts[quad[2]].black != c0 ||
      g.verts[quad[3]].black == c0)
    throw std::invalid_argument("square_move: colors do not alternate");
  // The four vertices must bound a face, i.e. one orientation of the cycle is
  // a face orbit of the rotation system.
  auto is_face = [&](const std::array<int, 4>& q) {
    for (int s : edges_between(g, q[0], q[1])) {
      int h = he_from(g, s, q[0]);
      bool ok = true;
      for (int t = 1; t <= 4; ++t) {
        int v = he_head(g, h);
        if (v != q[t % 4]) {
          ok = false;
          break;
        }
        int p = g.rot_index(v, h / 2);
        int e = g.verts[v].rot[(p + 1) % 3];
        h = he_from(g, e, v);
      }
      if (ok && he_tail(g, h) == q[0] && h / 2 == s) return true;
    }
    return false;
  };
  std::array<int, 4> rev{quad[0], quad[3], quad[2], quad[1]};
  if (!is_face(quad) && !is_face(rev))
    throw std::invalid_argument("square_move: vertices do not bound a face");
  PlabicGraph out = g;
  for (int v : quad) out.verts[v].black = !out.verts[v].black;
  return out;
}

PlabicGraph contract_edge(const PlabicGraph& g, int e) {
  if (e < 0 || e >= static_cast<int>(g.edges.size()))
    throw std::invalid_argument("contract_edge: no such edge");
  int u = g.edges[e].a, v = g.edges[e].b;
  if (g.is_boundary(u) || g.is_boundary(v))
    throw std::invalid_argument("contract_edge: edge touches the boundary");
  if (g.verts[u].black != g.verts[v].black)
    throw std::invalid_argument("contract_edge: endpoints differ in color");
  if (edges_between(g, u, v).size() > 1)
    throw std::invalid_argument("contract_edge: parallel edge would become a loop");
  PlabicGraph work = g;
  // Rotation of the merged vertex: u's other edges starting after e, then
  // v's other edges starting after e.
  std::vector<int> merged;
  int pu = work.rot_index(u, e), du = work.degree(u);
  for (int t = 1; t < du; ++t) merged.push_back(work.verts[u].rot[(pu + t) % du]);
  int pv = work.rot_index(v, e), dv = work.degree(v);
  for (int t = 1; t < dv; ++t) merged.push_back(work.verts[v].rot[(pv + t) % dv]);
  for (auto& ed : work.edges) {
    if (ed.a == v) ed.a = u;
    if (ed.b == v) ed.b = u;
  }
  work.verts[u].rot = std::move(merged);
  work.verts[v].rot.clear();
  std::vector<char> vdead(work.verts.size(), 0), edead(work.edges.size(), 0);
  vdead[v] = 1;
  edead[e] = 1;
  return compact(work, vdead, edead);
}

PlabicGraph expand_vertex(const PlabicGraph& g, int v, int first, int count) {
  if (v < g.n || v >= static_cast<int>(g.verts.size()))
    throw std::invalid_argument("expand_vertex: vertex not internal");
  int d = g.degree(v);
  if (d < 2 || count < 1 || count > d - 1)
    throw std::invalid_argument("expand_vertex: bad slice");
  first = ((first % d) + d) % d;
  PlabicGraph out = g;
  int w = out.add_internal(out.verts[v].black);
  std::vector<int> slice, rest;
  for (int t = 0; t < count; ++t) slice.push_back(g.verts[v].rot[(first + t) % d]);
  for (int t = count; t < d; ++t) rest.push_back(g.verts[v].rot[(first + t) % d]);
  for (int e : slice) {
    if (out.edges[e].a == v)
      out.edges[e].a = w;
    else
      out.edges[e].b = w;
  }
  out.verts[v].rot = rest;
  out.verts[w].rot = slice;
  int link = out.add_edge(v, w);  // appends to both rotations
  (void)link;
  return out;
}

PlabicGraph insert_midpoint(const PlabicGraph& g, int e, bool black) {
  if (e < 0 || e >= static_cast<int>(g.edges.size()))
    throw std::invalid_argument("insert_midpoint: no such edge");
  PlabicGraph out = g;
  int u = out.edges[e].a, v = out.edges[e].b;
  int m = out.add_internal(black);
  out.edges[e].b = m;  // e becomes u--m
  int e2 = static_cast<int>(out.edges.size());
  out.edges.push_back({m, v});
  for (int& x : out.verts[v].rot)
    if (x == e) x = e2;
  out.verts[m].rot = {e, e2};
  return out;
}

PlabicGraph remove_midpoint(const PlabicGraph& g, int v) {
  if (v < g.n || v >= static_cast<int>(g.verts.size()))
    throw std::invalid_argument("remove_midpoint: vertex not internal");
  if (g.degree(v) != 2)
    throw std::invalid_argument("remove_midpoint: vertex degree != 2");
  int f1 = g.verts[v].rot[0], f2 = g.verts[v].rot[1];
  int u = g.other_end(f1, v), w = g.other_end(f2, v);
  if (u == w)
    throw std::invalid_argument("remove_midpoint: splice would close a loop");
  PlabicGraph work = g;
  work.edges[f1] = {u, w};
  for (int& x : work.verts[w].rot)
    if (x == f2) x = f1;
  work.verts[v].rot.clear();
  std::vector<char> vdead(work.verts.size(), 0), edead(work.edges.size(), 0);
  vdead[v] = 1;
  edead[f2] = 1;
  return compact(work, vdead, edead);
}

PlabicGraph apply_move(const PlabicGraph& g, const Move& m) {
  switch (m.kind) {
    case Move::Kind::Square:
      return square_move(g, m.quad);
    case Move::Kind::Contract:
      return contract_edge(g, m.edge);
    case Move::Kind::Expand:
      return expand_vertex(g, m.vertex, m.first, m.count);
    case Move::Kind::InsertMid:
      return insert_midpoint(g, m.edge, m.black);
    case Move::Kind::RemoveMid:
      return remove_midpoint(g, m.vertex);
  }
  throw std::invalid_argument("apply_move: unknown move kind");
}

std::vector<std::array<int, 4>> find_square_moves(const PlabicGraph& g) {
  std::vector<std::array<int, 4>> out;
  std::vector<char> seen(2 * g.edges.size(), 0);
  for (int h0 = 0; h0 < static_cast<int>(seen.size()); ++h0) {
    if (seen[h0]) continue;
    // Trace the face orbit through internal vertices only; orbits touching
    // the boundary cannot be squares.
    std::vector<int> cyc;
    int h = h0;
    bool internal_face = true;
    do {
      seen[h] = 1;
      int v = he_head(g, h);
      if (g.is_boundary(v)) {
        internal_face = false;
        break;
      }
      cyc.push_back(v);
      int d = g.degree(v);
      int p = g.rot_index(v, h / 2);
      h = he_from(g, g.verts[v].rot[(p + 1) % d], v);
    } while (h != h0);
    if (!internal_face || cyc.size() != 4) continue;
    bool ok = true;
    for (int t = 0; t < 4; ++t)
      if (g.degree(cyc[t]) != 3 ||
          g.verts[cyc[t]].black == g.verts[cyc[(t + 1) % 4]].black)
        ok = false;
    std::array<int, 4> quad{};
    int least = 0;
    for (int t = 1; t < 4; ++t)
      if (cyc[t] < cyc[least]) least = t;
    for (int t = 0; t < 4; ++t) quad[t] = cyc[(least + t) % 4];
    if (ok && std::set<int>(cyc.begin(), cyc.end()).size() == 4)
      out.push_back(quad);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PositroidBases positroid_bases(const PlabicGraph& g0) {
  g0.check();
  // The matching construction needs a bipartite graph; edges between
  // same-colored vertices are collapsed first, which moves within the move
  // class and so keeps the boundary matroid.
  PlabicGraph g = g0;
  bool mono = false;
  for (const auto& ed : g.edges)
    if (!g.is_boundary(ed.a) && !g.is_boundary(ed.b) &&
        g.verts[ed.a].black == g.verts[ed.b].black)
      mono = true;
  if (mono) {
    g = normal_form(g);
    for (const auto& ed : g.edges)
      if (!g.is_boundary(ed.a) && !g.is_boundary(ed.b) &&
          g.verts[ed.a].black == g.verts[ed.b].black)
        throw std::invalid_argument(
            "positroid_bases: monochromatic edge survives contraction");
  }
  // Make every boundary vertex adjacent to a white vertex.
  std::vector<int> needs;
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    int a = g.edges[e].a, b = g.edges[e].b;
    bool ba = g.is_boundary(a), bb = g.is_boundary(b);
    if (!ba && !bb) continue;
    int internal = ba ? b : a;
    if ((ba && bb) || g.verts[internal].black) needs.push_back(e);
  }
  for (int e : needs) g = insert_midpoint(g, e, false);

  PositroidBases out;
  out.rank = g.white_count() - g.black_count();

  int total = static_cast<int>(g.verts.size());
  std::vector<char> covered(total, 0);  // internal covered / boundary used
  std::vector<int> chosen;              // boundary indices in the matching
  int uncovered = g.internal_count();

  auto candidates = [&](int v) {
    std::vector<int> cs;
    for (int e : g.verts[v].rot) {
      int u = g.other_end(e, v);
      if (!covered[u]) cs.push_back(e);
    }
    return cs;
  };

  std::function<void()> rec = [&]() {
    if (uncovered == 0) {
      std::vector<int> basis;
      for (int b : chosen) basis.push_back(b + 1);
      std::sort(basis.begin(), basis.end());
      out.bases.insert(std::move(basis));
      return;
    }
    int best = -1;
    std::vector<int> best_cs;
    for (int v = g.n; v < total; ++v) {
      if (covered[v]) continue;
      auto cs = candidates(v);
      if (best < 0 || cs.size() < best_cs.size()) {
        best = v;
        best_cs = std::move(cs);
        if (best_cs.empty()) return;  // dead branch
      }
    }
    for (int e : best_cs) {
      int u = g.other_end(e, best);
      covered[best] = covered[u] = 1;
      uncovered -= u >= g.n ? 2 : 1;
      if (u < g.n) chosen.push_back(u);
      rec();
      if (u < g.n) chosen.pop_back();
      uncovered += u >= g.n ? 2 : 1;
      covered[best] = covered[u] = 0;
    }
  };
  rec();

  for (const auto& b : out.bases)
    if (static_cast<int>(b.size()) != out.rank)
      throw std::logic_error("positroid_bases: matching boundary of wrong size");
  return out;
}

PlabicGraph normal_form(const PlabicGraph& g0) {
  PlabicGraph g = g0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
      int u = g.edges[e].a, v = g.edges[e].b;
      if (g.is_boundary(u) || g.is_boundary(v)) continue;
      if (g.verts[u].black != g.verts[v].black) continue;
      if (edges_between(g, u, v).size() > 1) continue;
      g = contract_edge(g, e);
      changed = true;
      break;
    }
    if (changed) continue;
    for (int v = g.n; v < static_cast<int>(g.verts.size()); ++v) {
      if (g.degree(v) != 2) continue;
      if (g.other_end(g.verts[v].rot[0], v) == g.other_end(g.verts[v].rot[1], v))
        continue;
      g = remove_midpoint(g, v);
      changed = true;
      break;
    }
  }
  return g;
}

std::string canonical_string(const PlabicGraph& g) {
  // Canonical ids by breadth-first discovery from the boundary in label
  // order, scanning each rotation list from the discovery edge onward.
  std::vector<int> vid(g.verts.size(), -1), eid(g.edges.size(), -1);
  std::vector<int> disc(g.verts.size(), -1);  // discovery edge per vertex
  int nv = 0, ne = 0;
  std::queue<int> q;
  for (int v = 0; v < g.n; ++v) {
    vid[v] = nv++;
    q.push(v);
  }
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    int d = g.degree(v);
    int start = disc[v] >= 0 ? g.rot_index(v, disc[v]) : 0;
    for (int t = 0; t < d; ++t) {
      int e = g.verts[v].rot[(start + t) % d];
      if (eid[e] < 0) eid[e] = ne++;
      int u = g.other_end(e, v);
      if (vid[u] < 0) {
        vid[u] = nv++;
        disc[u] = e;
        q.push(u);
      }
    }
  }
  for (int v = 0; v < static_cast<int>(g.verts.size()); ++v)
    if (vid[v] < 0)
      throw std::invalid_argument("canonical_string: vertex unreachable from boundary");
  // Emit vertices in canonical order.
  std::vector<int> order(g.verts.size());
  for (int v = 0; v < static_cast<int>(g.verts.size()); ++v) order[vid[v]] = v;
  std::ostringstream os;
  os << "n" << g.n;
  for (int cv = 0; cv < static_cast<int>(order.size()); ++cv) {
    int v = order[cv];
    os << ";";
    if (v >= g.n) os << (g.verts[v].black ? "B" : "W");
    int d = g.degree(v);
    int start = disc[v] >= 0 ? g.rot_index(v, disc[v]) : 0;
    for (int t = 0; t < d; ++t) {
      int e = g.verts[v].rot[(start + t) % d];
      os << (t ? "," : ":") << vid[g.other_end(e, v)] << "e" << eid[e];
    }
  }
  return os.str();
}

bool graphs_equal(const PlabicGraph& a, const PlabicGraph& b) {
  return canonical_string(normal_form(a)) == canonical_string(normal_form(b));
}

PlabicGraph graph_of_permutation(const DecoratedPermutation& pi) {
  int n = pi.n;
  if (n <= 0) throw std::invalid_argument("graph_of_permutation: empty permutation");
  std::vector<long> w = to_affine(pi).window;

  // Peel transpositions until only fixed (loop) and shifted-by-n (coloop)
  // positions remain. A peel swaps two undecorated positions p < q with
  // nothing but decorated positions in between; the window stays bounded
  // exactly when q <= w(p) < w(q) <= p+n, and each peel adds one inversion,
  // so this walks down to the zero-dimensional cell below pi.
  std::vector<std::pair<int, int>> bridges;  // 0-based wire pairs (left, right)
  auto value_at = [&](int p) {  // affine position p in [1, 2n]
    return p <= n ? w[p - 1] : w[p - n - 1] + n;
  };
  auto decorated = [&](int p) {
    long v = value_at(p);
    return v == p || v == p + n;
  };
  while (true) {
    int fp = -1, fq = -1;
    for (int p = 1; p <= n && fp < 0; ++p) {
      if (decorated(p)) continue;
      int q = p + 1;
      while (q < p + n && decorated(q)) ++q;
      if (q == p + n) break;  // only one active position: impossible unless pure
      long a = value_at(p), b = value_at(q);
      if (q <= a && a < b && b <= p + n) {
        fp = p;
        fq = q;
      }
    }
    if (fp < 0) break;
    int q0 = (fq - 1) % n + 1;
    bridges.push_back({fp - 1, q0 - 1});
    long a = value_at(fp), b = value_at(fq);
    w[fp - 1] = b;
    w[q0 - 1] = fq > n ? a - n : a;
  }
  for (int i = 0; i < n; ++i)
    if (w[i] != i + 1 && w[i] != i + 1 + n)
      throw std::logic_error("graph_of_permutation: peeling stuck before base case");

  // Stack the bridges onto n radial wires, first peeled closest to the
  // boundary, and finish each wire with a lollipop for its decoration.
  PlabicGraph g(n);
  std::vector<int> tip(n);
  for (int i = 0; i < n; ++i) tip[i] = i;
  struct WireVertex {
    int v, up, bridge;
    bool white_side;
  };
  std::vector<WireVertex> placed;
  for (auto [i, j] : bridges) {
    int wv = g.add_internal(false);
    int bv = g.add_internal(true);
    int up_w = g.add_edge(tip[i], wv);
    int up_b = g.add_edge(tip[j], bv);
    int br = g.add_edge(wv, bv);
    placed.push_back({wv, up_w, br, true});
    placed.push_back({bv, up_b, br, false});
    tip[i] = wv;
    tip[j] = bv;
  }
  for (int i = 0; i < n; ++i) {
    int t = g.add_internal(w[i] == i + 1);  // loop -> black, coloop -> white
    g.add_edge(tip[i], t);
  }
  // Down-edges exist now; fix the rotations. On a wire pointing away from
  // the viewer's boundary-at-top picture, clockwise order is [up, bridge,
  // down] at the white end of a bridge and [up, down, bridge] at the black.
  for (const auto& pv : placed) {
    int down = -1;
    for (int e : g.verts[pv.v].rot)
      if (e != pv.up && e != pv.bridge) down = e;
    if (down < 0) throw std::logic_error("graph_of_permutation: wire not capped");
    g.set_rotation(pv.v, pv.white_side
                             ? std::vector<int>{pv.up, pv.bridge, down}
                             : std::vector<int>{pv.up, down, pv.bridge});
  }
  // Lollipops that ended up hanging on internal vertices are detours the
  // trips never see; drop them.
  std::vector<char> vdead(g.verts.size(), 0), edead(g.edges.size(), 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = g.n; v < static_cast<int>(g.verts.size()); ++v) {
      if (vdead[v]) continue;
      int deg = 0, last = -1;
      for (int e : g.verts[v].rot)
        if (!edead[e]) {
          ++deg;
          last = e;
        }
      if (deg != 1) continue;
      int u = g.other_end(last, v);
      if (g.is_boundary(u)) continue;  // genuine lollipop
      int udeg = 0;
      for (int e : g.verts[u].rot)
        if (!edead[e]) ++udeg;
      if (udeg < 3) continue;  // dropping would disturb the trips
      vdead[v] = 1;
      edead[last] = 1;
      changed = true;
    }
  }
  PlabicGraph out = compact(g, vdead, edead);
  out.check();
  return out;
}

PlabicGraph black_trivalent_form(const PlabicGraph& g0) {
  PlabicGraph g = g0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = g.n; v < static_cast<int>(g.verts.size()); ++v) {
      if (g.degree(v) != 2) continue;
      if (g.other_end(g.verts[v].rot[0], v) == g.other_end(g.verts[v].rot[1], v))
        continue;
      g = remove_midpoint(g, v);
      changed = true;
      break;
    }
    if (changed) continue;
    for (int v = g.n; v < static_cast<int>(g.verts.size()); ++v) {
      if (!g.verts[v].black || g.degree(v) != 1) continue;
      int u = g.other_end(g.verts[v].rot[0], v);
      if (g.is_boundary(u))
        throw std::invalid_argument(
            "black_trivalent_form: black lollipop (trip has a loop)");
      // After the degree-2 sweep the neighbor has degree >= 3, so the leaf
      // is an invisible detour.
      std::vector<char> vdead(g.verts.size(), 0), edead(g.edges.size(), 0);
      vdead[v] = 1;
      edead[g.verts[v].rot[0]] = 1;
      g = compact(g, vdead, edead);
      changed = true;
      break;
    }
  }
  changed = true;
  while (changed) {
    changed = false;
    for (int v = g.n; v < static_cast<int>(g.verts.size()); ++v) {
      if (g.verts[v].black && g.degree(v) > 3) {
        g = expand_vertex(g, v, 0, 2);
        changed = true;
        break;
      }
    }
  }
  g.check();
  return g;
}

DiskFaces disk_faces(const PlabicGraph& g) {
  // Walls are the real edges plus one rim arc per boundary gap; at a
  // boundary vertex the clockwise order is [arc ahead, leg, arc behind].
  int E = static_cast<int>(g.edges.size());
  DiskFaces df;
  df.walls = E + g.n;
  auto wall_ends = [&](int e) -> std::pair<int, int> {
    if (e < E) return {g.edges[e].a, g.edges[e].b};
    int r = e - E;
    return {r, (r + 1) % g.n};
  };
  std::vector<std::vector<int>> rot(g.verts.size());
  for (int v = 0; v < static_cast<int>(g.verts.size()); ++v) {
    if (g.is_boundary(v))
      rot[v] = {E + v, g.verts[v].rot[0], E + (v - 1 + g.n) % g.n};
    else
      rot[v] = g.verts[v].rot;
  }
  auto head = [&](int h) {
    auto [a, b] = wall_ends(h / 2);
    return (h & 1) ? a : b;
  };
  auto from = [&](int e, int tail) {
    auto [a, b] = wall_ends(e);
    if (a == tail) return 2 * e;
    if (b == tail) return 2 * e + 1;
    throw std::logic_error("disk_faces: bad wall traversal");
  };
  auto idx_in = [&](int v, int e) {
    for (int i = 0; i < static_cast<int>(rot[v].size()); ++i)
      if (rot[v][i] == e) return i;
    throw std::logic_error("disk_faces: wall missing from rotation");
  };
  df.face_of.assign(2 * df.walls, -1);
  for (int h0 = 0; h0 < 2 * df.walls; ++h0) {
    if (df.face_of[h0] >= 0) continue;
    int id = static_cast<int>(df.orbits.size());
    df.orbits.emplace_back();
    int h = h0;
    do {
      df.face_of[h] = id;
      df.orbits[id].push_back(h);
      int v = head(h);
      int p = idx_in(v, h / 2);
      int e = rot[v][(p + 1) % rot[v].size()];
      h = from(e, v);
    } while (h != h0);
  }
  df.outer = df.face_of[from(E + 0, 0)];  // rim arc 0 leaving boundary 0
  return df;
}

PlabicGraph t_dual_graph(const PlabicGraph& g) {
  g.check();
  for (int v = g.n; v < static_cast<int>(g.verts.size()); ++v)
    if (g.verts[v].black && g.degree(v) != 3)
      throw std::invalid_argument(
          "t_dual_graph: internal black vertex of degree != 3");

  int E = static_cast<int>(g.edges.size());
  DiskFaces df = disk_faces(g);
  const auto& face = df.face_of;
  const auto& orbit = df.orbits;
  int outer = df.outer;
  auto head = [&](int h) {
    if (h / 2 < E) {
      const auto& ed = g.edges[h / 2];
      return (h & 1) ? ed.a : ed.b;
    }
    int r = h / 2 - E;
    return (h & 1) ? r : (r + 1) % g.n;
  };
  auto from = [&](int e, int tail) {
    if (e < E) return 2 * e + (g.edges[e].a == tail ? 0 : 1);
    return 2 * e + (e - E == tail ? 0 : 1);
  };

  PlabicGraph res(g.n);
  std::vector<int> bhat(orbit.size(), -1);
  for (int f = 0; f < static_cast<int>(orbit.size()); ++f)
    if (f != outer) bhat[f] = res.add_internal(true);
  std::vector<int> what(g.verts.size(), -1);
  for (int v = g.n; v < static_cast<int>(g.verts.size()); ++v)
    if (g.verts[v].black) what[v] = res.add_internal(false);

  // Corner t of a black vertex (between rot slots t and t+1) lies in the
  // face entered along slot t; that face's hub gets a spoke to the white
  // cover vertex.
  std::map<std::pair<int, int>, int> corner_edge;
  for (int v = g.n; v < static_cast<int>(g.verts.size()); ++v) {
    if (!g.verts[v].black) continue;
    std::vector<int> order;
    for (int t = 0; t < 3; ++t) {
      int arriving = from(g.verts[v].rot[t], g.other_end(g.verts[v].rot[t], v));
      int f = face[arriving];
      if (f == outer) throw std::logic_error("t_dual_graph: corner in outer face");
      int e = res.add_edge(what[v], bhat[f]);
      corner_edge[{v, t}] = e;
      order.push_back(e);
    }
    res.set_rotation(what[v], order);
  }
  // Boundary hats: the rim arc between old boundary labels i-1 and i hosts
  // new boundary label i, attached into the face on the inner side of that
  // arc (the face traversing the arc backwards).
  std::vector<int> bd_edge(g.n, -1);
  for (int r = 0; r < g.n; ++r) {
    int h = from(E + r, (r + 1) % g.n);  // backward traversal of arc r
    int f = face[h];
    if (f == outer) throw std::logic_error("t_dual_graph: rim arc faces outward");
    bd_edge[r] = res.add_edge((r + 1) % g.n, bhat[f]);
  }
  // Hub rotations follow the face orbits. The next-wall rule walks each
  // inner face counterclockwise, so the clockwise rotation at the hub is the
  // reverse of the orbit order.
  for (int f = 0; f < static_cast<int>(orbit.size()); ++f) {
    if (f == outer) continue;
    std::vector<int> order;
    for (int h : orbit[f]) {
      int e = h / 2;
      if (e >= E) {
        int r = e - E;
        if (head(h) == r) order.push_back(bd_edge[r]);  // backward arc
      } else {
        int v = head(h);
        if (!g.is_boundary(v) && g.verts[v].black)
          order.push_back(corner_edge.at({v, g.rot_index(v, e)}));
      }
    }
    std::reverse(order.begin(), order.end());
    res.set_rotation(bhat[f], order);
  }
  res.check();
  return res;
}

}  // namespace positroid
