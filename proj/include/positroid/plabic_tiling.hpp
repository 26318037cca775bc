#pragma once

#include <vector>

#include "positroid/plabic.hpp"
#include "positroid/subdivision.hpp"

namespace positroid {

// Planar dual of a connected reduced plabic graph, drawn in a convex n-gon:
// one polygon per internal vertex of the graph, one polygon corner per inner
// face around that vertex, in clockwise order. The face between boundary
// vertices i-1 and i is circle vertex i of the n-gon; faces not touching the
// rim are punctures, labeled n+1 .. n+punctures.
struct PlabicTiling {
  int n = 0;
  int punctures = 0;
  std::vector<std::vector<int>> polys;  // vertex cycles, clockwise
  std::vector<char> black;              // color per polygon
};

// Builds the dual tiling. The graph must pass check() and its internal part
// must be connected (so that each circle vertex is a distinct face); a
// lollipop or other stray component makes the tiling degenerate and throws.
PlabicTiling tiling_of_graph(const PlabicGraph& g);

// Number of black triangles in any triangulation of the tiling: polygons
// triangulate into (#sides - 2) triangles; monogons and bigons contribute
// nothing.
int tiling_area(const PlabicTiling& t);

// Arc statistics against a tiling. Area counts black triangles weakly left
// of h -> j (the side swept clockwise from h to j), punc counts punctures
// weakly left. Polygons having no circle vertices at all are never counted
// as left; such pinched polygons do not occur in the graphs treated here.
ArcStats arc_stats(const PlabicTiling& t, int h, int j);

}  // namespace positroid
