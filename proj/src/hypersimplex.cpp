#include "positroid/hypersimplex.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace positroid {

HPoint moment_map(const ExactMatrix& A) {
  int p = A.rows(), n = A.cols();
  if (p < 1 || n < p)
    throw std::invalid_argument("moment_map: need at least as many columns as rows");
  if (A.rank() != p)
    throw std::invalid_argument("moment_map: matrix must have full row rank");
  std::vector<Rational> num(n);
  Rational den;
  std::vector<int> I(p);
  for (int i = 0; i < p; ++i) I[i] = i + 1;
  while (true) {
    Rational pl = plucker(A, I);
    if (!pl.is_zero()) {
      Rational sq = pl * pl;
      for (int i : I) num[static_cast<size_t>(i) - 1] += sq;
      den += sq;
    }
    int i = p - 1;
    while (i >= 0 && I[i] == n - (p - 1 - i)) --i;
    if (i < 0) break;
    ++I[i];
    for (int t = i + 1; t < p; ++t) I[t] = I[t - 1] + 1;
  }
  HPoint out;
  out.x.resize(n);
  for (int i = 0; i < n; ++i) out.x[i] = num[i] / den;
  return out;
}

PositroidPolytope tree_polytope(const BicoloredSubdivision& S) {
  PositroidPolytope P;
  P.n = S.n;
  PositroidBases pb = positroid_bases(dual_tree(S));
  P.rank = pb.rank;
  P.bases = std::move(pb.bases);

  BicoloredTriangulation tri = canonical_triangulation(S);
  std::set<FacetIneq> fs;

  // Nonnegativity facets: boundary vertex i of the dual tree hangs off the
  // polygon owning circle side {i, i+1}; a white owner makes x_i >= 0 a
  // facet. (A black owner's x_i >= 0 arrives below as the redundant
  // orientation of that boundary side.)
  for (int i = 1; i <= S.n; ++i) {
    int j = cyclic_next(i, S.n);
    bool white_owner = false;
    for (const auto& w : S.white)
      if (std::binary_search(w.begin(), w.end(), i) &&
          std::binary_search(w.begin(), w.end(), j))
        white_owner = true;
    if (white_owner)
      fs.insert(FacetIneq{CyclicInterval(i, i, S.n), 0, true});
  }

  // Interval inequalities: every side {u, v} of a black polygon, in both
  // orientations h -> j, bounds x_{[h, j-1]} >= area(h -> j). The
  // orientation keeping the black polygon inside the closed interval [h, j]
  // cuts a genuine facet; the reversed one is valid but redundant.
  for (const auto& poly : S.black) {
    int sz = static_cast<int>(poly.size());
    for (int s = 0; s < sz; ++s) {
      int u = poly[s], v = poly[(s + 1) % sz];
      for (int dir = 0; dir < 2; ++dir) {
        int h = dir == 0 ? u : v;
        int j = dir == 0 ? v : u;
        CyclicInterval closed(h, j, S.n);
        bool black_left = true;
        for (int x : poly)
          if (!closed.contains(x)) black_left = false;
        fs.insert(FacetIneq{CyclicInterval(h, cyclic_prev(j, S.n), S.n),
                            arc_stats(tri, h, j).area, black_left});
      }
    }
  }

  P.facets.assign(fs.begin(), fs.end());
  return P;
}

std::pair<int, int> tiling_bounds(const PlabicTiling& T, int h, int j) {
  ArcStats st = arc_stats(T, h, j);
  if (!st.compatible)
    throw std::invalid_argument("tiling_bounds: arc not compatible with the tiling");
  int lo = st.area - st.punc;
  return {lo, lo + 1};
}

WSimplex w_simplex(const WPermutation& w) {
  WSimplex s{w, w_vertex_sets(w)};
  int n = w.n;
  // The vertex indicators must be affinely independent: stacking them with a
  // column of ones gives an n x (n+1) matrix of full row rank.
  ExactMatrix M(n, n + 1);
  for (int a = 0; a < n; ++a) {
    for (int i : s.verts[a]) M(a, i - 1) = Rational(1);
    M(a, n) = Rational(1);
  }
  if (M.rank() != n)
    throw std::logic_error("w_simplex: vertices not affinely independent");
  return s;
}

bool point_in_simplex(const WSimplex& s, const HPoint& p, bool strict) {
  int n = s.w.n;
  if (p.n() != n)
    throw std::invalid_argument("point_in_simplex: point in wrong dimension");
  // Barycentric coordinates: solve sum_a lambda_a e_{I_a} = p with
  // sum_a lambda_a = 1 through the kernel of the augmented system.
  ExactMatrix M(n + 1, n + 1);
  for (int a = 0; a < n; ++a) {
    for (int i : s.verts[a]) M(i - 1, a) = Rational(1);
    M(n, a) = Rational(1);
  }
  for (int i = 0; i < n; ++i) M(i, n) = -p.x[i];
  M(n, n) = Rational(-1);
  ExactMatrix K = M.kernel();
  if (K.rows() != 1) return false;  // point outside the affine hull
  const Rational& t = K(0, n);
  for (int a = 0; a < n; ++a) {
    Rational lam = K(0, a) / t;
    if (strict ? !(lam > Rational(0)) : lam.sign() < 0) return false;
  }
  return true;
}

bool simplex_in_polytope(const WSimplex& s, const PositroidPolytope& P) {
  if (s.w.n != P.n || s.w.k + 1 != P.rank)
    throw std::invalid_argument("simplex_in_polytope: mismatched type");
  // e_I lies in the polytope exactly when I is a basis, and convexity
  // carries the vertices' membership to the whole simplex.
  for (const auto& I : s.verts)
    if (!P.bases.count(I)) return false;
  return true;
}

PositroidPolytope descent_polytope(const std::vector<int>& I, int n) {
  return tree_polytope(subdivision_of(kermit(I, n).tri));
}

}  // namespace positroid
