#pragma once

#include <utility>
#include <vector>

#include "positroid/matrix.hpp"
#include "positroid/plabic_tiling.hpp"
#include "positroid/polytope.hpp"
#include "positroid/subdivision.hpp"
#include "positroid/wperm.hpp"

namespace positroid {

// Moment map image of the row span of A: the Pluecker-square weighted average
// of the hypersimplex vertices, sum p_I^2 e_I / sum p_I^2. A must be full
// row rank with at least as many columns as rows.
HPoint moment_map(const ExactMatrix& A);

// The positroid polytope of the dual tree of a bicolored subdivision, with
// both descriptions filled in: bases from the plabic tree, and the exact
// facet list (x_i >= 0 for boundary vertices adjacent to a white vertex, and
// x_{[h,j-1]} >= area(h -> j) for arcs bounding a black polygon on the left).
// Each black polygon side also contributes its reversed arc's inequality,
// valid but redundant, flagged facet = false.
PositroidPolytope tree_polytope(const BicoloredSubdivision& S);

// Strict bounds (area - punc, area - punc + 1) for x_{[h,j-1]} on the open
// positroid polytope of the cell dual to the tiling. The arc must be
// compatible with the tiling.
std::pair<int, int> tiling_bounds(const PlabicTiling& T, int h, int j);

// Simplex of the hypersimplex triangulation indexed by w: vertices are the
// indicator vectors of the cyclic descent sets I_1..I_n of the rotations
// of w.
struct WSimplex {
  WPermutation w;
  std::vector<std::vector<int>> verts;  // I_1..I_n, each sorted
};

// Builds the w-simplex and checks its vertices are affinely independent.
WSimplex w_simplex(const WPermutation& w);

// Barycentric membership test; strict asks for the open simplex.
bool point_in_simplex(const WSimplex& s, const HPoint& p, bool strict = false);

// True when every vertex set of the simplex is a basis of the polytope; by
// convexity this decides containment of the whole simplex.
bool simplex_in_polytope(const WSimplex& s, const PositroidPolytope& P);

// The descent-class positroid polytope: the tree polytope of the kermit
// subdivision on I ⊆ [2, n-1]. Its simplices are exactly the w-simplices
// with cdes(w) = {1} ∪ I.
PositroidPolytope descent_polytope(const std::vector<int>& I, int n);

}  // namespace positroid
