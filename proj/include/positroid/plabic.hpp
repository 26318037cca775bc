#pragma once

#include <array>
#include <set>
#include <string>
#include <vector>

#include "positroid/permutation.hpp"

namespace positroid {

// Planar bicolored graph embedded in a disk. Vertices 0..n-1 are the boundary
// vertices, drawn clockwise and carrying labels 1..n; each has exactly one
// incident edge. Internal vertices follow and are colored black or white. The
// embedding is a rotation system: rot[v] lists the incident edge ids in
// clockwise order around v.
struct PlabicGraph {
  struct Vertex {
    bool internal = false;
    bool black = false;        // meaningful for internal vertices only
    std::vector<int> rot;      // incident edge ids, clockwise
  };
  struct Edge {
    int a = -1;
    int b = -1;                // unordered endpoints
  };

  int n = 0;
  std::vector<Vertex> verts;   // [0,n) boundary, [n,...) internal
  std::vector<Edge> edges;

  PlabicGraph() = default;
  explicit PlabicGraph(int n_boundary);

  int add_internal(bool black);
  // Appends the edge to both endpoint rotation lists and returns its id.
  int add_edge(int u, int v);
  // Replaces rot[v]; the new order must be a permutation of the old list.
  void set_rotation(int v, std::vector<int> order);

  bool is_boundary(int v) const { return v < n; }
  int degree(int v) const { return static_cast<int>(verts[v].rot.size()); }
  int other_end(int e, int v) const;
  int rot_index(int v, int e) const;   // position of e in rot[v]

  int internal_count() const;
  int white_count() const;
  int black_count() const;

  // Number of regions the graph cuts the disk into (boundary arcs between
  // consecutive boundary vertices count as walls). For a reduced graph this
  // is one more than the dimension of its positroid cell.
  int face_count() const;

  // Structural validation: boundary degrees are 1, rotation lists and edge
  // endpoints agree, no self-loops, every internal vertex reaches the
  // boundary, and internal leaves only occur as lollipops (the leaf hangs
  // off the boundary through a chain of degree-2 vertices). Throws
  // std::invalid_argument.
  void check(bool forbid_stray_leaves = true) const;
};

// Follows the trip starting at each boundary vertex: at a black vertex the
// walk takes the next edge clockwise from its arrival edge (a maximal right
// turn), at a white vertex the next edge counterclockwise (maximal left).
// Fixed points are decorated by the color of the leaf where the walk turned
// around. With assert_reduced the face count is checked against the cell
// dimension, which detects most non-reduced inputs cheaply.
DecoratedPermutation trip_permutation(const PlabicGraph& g,
                                      bool assert_reduced = true);

// Local moves. Each returns a new graph and leaves the input untouched; an
// inapplicable location throws std::invalid_argument.
//
// Swap the colors of four trivalent internal vertices of alternating colors
// that bound a quadrilateral face, given in face-cycle order.
PlabicGraph square_move(const PlabicGraph& g, const std::array<int, 4>& quad);
// Merge the two same-colored internal endpoints of an edge.
PlabicGraph contract_edge(const PlabicGraph& g, int e);
// Split internal vertex v in two, moving the cyclic slice
// rot[v][first..first+count) to the new vertex; inverse of contract_edge.
PlabicGraph expand_vertex(const PlabicGraph& g, int v, int first, int count);
// Subdivide edge e with a degree-2 vertex of the given color.
PlabicGraph insert_midpoint(const PlabicGraph& g, int e, bool black);
// Remove a degree-2 internal vertex, splicing its edges together.
PlabicGraph remove_midpoint(const PlabicGraph& g, int v);

struct Move {
  enum class Kind { Square, Contract, Expand, InsertMid, RemoveMid };
  Kind kind = Kind::InsertMid;
  std::array<int, 4> quad{-1, -1, -1, -1};  // Square
  int edge = -1;                            // Contract, InsertMid
  int vertex = -1;                          // Expand, RemoveMid
  int first = 0, count = 0;                 // Expand
  bool black = false;                       // InsertMid
};

PlabicGraph apply_move(const PlabicGraph& g, const Move& m);

// All quads at which square_move applies, each in face-cycle order with the
// lexicographically least vertex first.
std::vector<std::array<int, 4>> find_square_moves(const PlabicGraph& g);

// Boundary sets of almost perfect matchings. The graph must have no two
// internal neighbors of equal color; boundary edges whose internal endpoint
// is black get a white midpoint inserted first, so that every matching
// covers each internal vertex exactly once and each boundary vertex at most
// once. The boundary sets are the bases of a positroid of the stated rank;
// an empty set of bases signals that no matching exists.
struct PositroidBases {
  int rank = 0;
  std::set<std::vector<int>> bases;  // sorted 1-based boundary labels
};

PositroidBases positroid_bases(const PlabicGraph& g);

// Contract all same-colored internal edges and remove degree-2 internal
// vertices until neither applies. Trip permutation and bases are preserved.
PlabicGraph normal_form(const PlabicGraph& g);

// Deterministic serialization of the embedded graph up to internal vertex
// relabeling: a breadth-first traversal seeded from the boundary vertices in
// label order, reading each rotation list from the discovery edge. Two
// graphs are isomorphic respecting boundary labels and embedding iff their
// strings agree.
std::string canonical_string(const PlabicGraph& g);

// Equality after normal_form; the working notion of "same graph up to
// contraction and midpoint moves".
bool graphs_equal(const PlabicGraph& a, const PlabicGraph& b);

// Builds a reduced plabic graph with the given trip permutation by peeling
// transpositions off the permutation and stacking the corresponding bridges
// onto a fan of wires, one per boundary vertex.
PlabicGraph graph_of_permutation(const DecoratedPermutation& pi);

// Face decomposition of the disk. Walls are the graph edges (ids 0..E-1)
// followed by the n rim arcs (ids E..E+n-1; arc r joins boundary vertices r
// and (r+1) mod n, in that first/second order). Directed wall 2*w runs from
// the wall's first endpoint to its second, 2*w+1 the reverse. Each directed
// wall lies on exactly one face; the next-wall rule walks inner faces
// counterclockwise, and the face in the corner between rot[t] and rot[t+1]
// of a vertex v is the face of the directed edge arriving at v via rot[t].
struct DiskFaces {
  int walls = 0;                         // E + n
  int outer = -1;                        // face beyond the rim
  std::vector<int> face_of;              // directed wall id -> face id
  std::vector<std::vector<int>> orbits;  // directed walls per face, walk order
};
DiskFaces disk_faces(const PlabicGraph& g);

// Rewrites g so that every internal black vertex is trivalent: stray leaves
// hanging on internal vertices are dropped, degree-2 black vertices are
// spliced out, and larger black vertices are split. The trip permutation is
// unchanged; the input must have no black lollipop (loopless trip).
PlabicGraph black_trivalent_form(const PlabicGraph& g);

// T-dual graph: a black vertex in each face, a white vertex on top of each
// (trivalent) black vertex of g, edges for each corner a black vertex
// contributes to a face, and boundary vertex i reattached in the face
// touching the boundary segment between i-1 and i. The trip permutation of
// the result is the T-dual of trip_permutation(g).
PlabicGraph t_dual_graph(const PlabicGraph& g);

}  // namespace positroid
