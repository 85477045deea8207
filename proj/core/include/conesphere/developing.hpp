#pragma once

#include <map>
#include <utility>
#include <vector>

#include "conesphere/eisenstein.hpp"
#include "conesphere/linalg.hpp"
#include "conesphere/triangulation.hpp"

namespace conesphere {

// A spanning tree of the 1-skeleton, spanning all V vertices.
struct SpanningTree {
  std::vector<int> edges;  // smaller slot of each tree edge, ascending
  std::vector<bool> cut;   // per slot: true iff its edge lies on the tree
  bool is_cut(int s) const { return cut[s]; }
};

// Deterministic BFS tree rooted at vertex seed % V; within a vertex the
// outgoing slots are scanned in ascending order.
SpanningTree spanning_tree(const Triangulation& t, int seed);

// The surface cut along the tree and developed into the plane. position[s]
// is the image of the corner at slot s; corners identified across an
// interior (non-tree) edge get equal positions, so the disk is encoded
// without re-indexing its boundary-split vertices.
struct DevelopedDisk {
  std::vector<EisInt> position;
  std::vector<int> boundary;  // cut slots in boundary cycle order, 2(V-1) of them
  SpanningTree tree;
};

// Places triangle 0 at (0, 1, 1+w) and extends breadth-first across interior
// edges; positions of already-placed triangles must match exactly.
DevelopedDisk cut_and_develop(const Triangulation& t, const SpanningTree& tree);

// label(s) = position[next(s)] - position[s]; the three labels of a triangle
// sum to zero and each has norm 1.
std::vector<EisInt> edge_labels(const Triangulation& t, const DevelopedDisk& disk);

// For each cut pair (a, b), a < b, the unit u with label(b) = u * label(a).
// Throws NotAUnit if the ratio is not a sixth root of unity (impossible for
// a correct development).
std::map<std::pair<int, int>, UnitSixth> gluing_units(const Triangulation& t,
                                                      const DevelopedDisk& disk,
                                                      const std::vector<EisInt>& labels);

// Local coordinates on the space of nearby flat cone structures: label
// vectors satisfying triangle closure, interior-edge negation, the frozen
// cut-pair unit relations, and vanishing curvature at every ordinary
// (degree-6) vertex. basis columns span the solution space; rows at
// pivot_slots form the identity, so the labels at pivot_slots are the
// coordinates.
struct ModuliChart {
  int dim = 0;  // m - 2 for m cone points
  Matrix basis;                       // 3T x dim
  std::vector<int> pivot_slots;       // dim slots, lexicographically first
  Matrix constraints;                 // full system on all 3T labels
  std::vector<EisInt> own_labels;     // the surface's own label vector
  std::vector<EisFrac> own_coords;    // its chart coordinates
  SpanningTree tree;
  std::map<std::pair<int, int>, UnitSixth> units;
};

ModuliChart moduli_chart(const Triangulation& t, const SpanningTree& tree);
ModuliChart moduli_chart(const Triangulation& t, int seed);

// Coordinate change between two charts of the same surface: the dim x dim
// matrix M with to_coords = M * from_coords for every structure near the
// base point. Exactness is asserted on all 3T label rows.
Matrix chart_change(const Triangulation& t, const ModuliChart& from, const ModuliChart& to);

}  // namespace conesphere
