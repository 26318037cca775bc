#pragma once

#include <array>
#include <vector>

#include "positroid/plabic.hpp"

namespace positroid {

// Triangulation of the convex n-gon (vertices 1..n drawn clockwise) with a
// chosen set of triangles colored black, kept sorted: each triple ascending,
// the list in lexicographic order. The white triangles are implicit. Black
// triangles may share sides; merging same-colored neighbors yields the
// bicolored subdivision below.
struct BicoloredTriangulation {
  int n = 0;
  std::vector<std::array<int, 3>> black;
};

// Subdivision of the n-gon into polygons colored black and white such that
// no two same-colored polygons share a side. Every polygon is stored as its
// vertex cycle in ascending circular order starting from its least vertex;
// both lists are kept sorted lexicographically. The type is (k,n) where
// k = sum over black polygons of (size - 2), the number of black triangles
// in any triangulation.
struct BicoloredSubdivision {
  int n = 0;
  std::vector<std::vector<int>> black;
  std::vector<std::vector<int>> white;

  int k() const;
};

// Validates and normalizes a triangulation: triples ascending and lex
// sorted, exactly covering the n-gon once the white complement is
// triangulated, pairwise non-crossing. Throws std::invalid_argument.
BicoloredTriangulation make_triangulation(int n,
                                          std::vector<std::array<int, 3>> black);

// Subdivision with the given black polygons; the white regions are computed
// by tracing the complement. Validates that the black polygons have at least
// three vertices each, are pairwise non-crossing, and share no sides.
BicoloredSubdivision make_subdivision(int n, std::vector<std::vector<int>> black);

// Merges black triangles that share sides into black polygons and fills in
// the white complement.
BicoloredSubdivision subdivision_of(const BicoloredTriangulation& t);

// Triangulates every black polygon as a fan from its least vertex. The
// resulting areas and downstream constructions are deterministic; any other
// triangulation of the same subdivision is move-equivalent.
BicoloredTriangulation canonical_triangulation(const BicoloredSubdivision& s);

// Relabels vertices v -> v + s (mod n), renormalizing the sorted order.
BicoloredTriangulation rotated(const BicoloredTriangulation& t, int s);
BicoloredSubdivision rotated(const BicoloredSubdivision& s, int shift);

// Planar dual of a subdivision: one internal vertex per polygon carrying the
// polygon's color, an edge across every side shared by two polygons, and a
// boundary leg from the polygon containing circle side {i, i+1} to boundary
// vertex i. The result is a tree whose trip permutation is loopless of type
// (k+1, n).
PlabicGraph dual_tree(const BicoloredSubdivision& s);

// Like dual_tree but keeps each black triangle of the triangulation as its
// own trivalent black vertex (the white regions are still merged), so the
// result is black-trivalent and contracts to dual_tree(subdivision_of(t)).
PlabicGraph triangulated_dual(const BicoloredTriangulation& t);

// The white-trivalent graph attached to a triangulation: black vertices
// B_1..B_n at the polygon corners, each with a stub to boundary vertex i,
// and a trivalent white vertex joined to the corners of each black triangle,
// in lexicographic triangle order. Its trip permutation is T-dual to the
// dual tree's and its matchings have rank k.
PlabicGraph ghat_of_triangulation(const BicoloredTriangulation& t);

// Statistics of the arc from h to j (1-based circle vertices, h != j).
// "Left" means the open cyclic interval (h, j), the side swept walking
// clockwise from h to j.
struct ArcStats {
  bool compatible = false;      // crosses no subdivision side
  int area = 0;                 // black triangles strictly left of the arc
  int punc = 0;                 // punctures weakly left of the arc
  bool facet_defining = false;  // some black polygon meets the arc's ends and
                                // lies otherwise on one side of it
  bool black_arc = false;       // {h, j} is a side of a black triangle
};

ArcStats arc_stats(const BicoloredTriangulation& t, int h, int j);

// All bicolored subdivisions of type (k,n), lexicographically ordered by
// their black polygon lists. Counts follow the Schroeder-number table.
std::vector<BicoloredSubdivision> enumerate_subdivisions(int k, int n);

// Caterpillar data: black triangles {1, i, i+1} for i in I, which must be a
// subset of [2, n-1]. K is the white-trivalent graph of the triangulation,
// C its dual tree.
struct Kermit {
  BicoloredTriangulation tri;
  PlabicGraph K;
  PlabicGraph C;
};

Kermit kermit(const std::vector<int>& I, int n);

}  // namespace positroid
