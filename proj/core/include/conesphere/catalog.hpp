#pragma once

#include <string>
#include <vector>

#include "conesphere/eisenstein.hpp"
#include "conesphere/triangulation.hpp"

namespace conesphere {

// A named example surface with its independently recorded invariants.
struct CatalogEntry {
  std::string name;
  Triangulation triangulation;
  int expected_triangles{0};
  int expected_cone_points{0};
  std::vector<BigRat> expected_deficits;  // sorted ascending, units of pi
};

CatalogEntry double_triangle();
CatalogEntry tetrahedron();
CatalogEntry octahedron();
CatalogEntry icosahedron();

// Two apexes of degree n over an n-gon equator of degree-4 vertices; T = 2n.
// Throws DegreeTooHigh for n > 6 (the apex would be a negative-deficit cone).
CatalogEntry bipyramid(int n);

// Splits every triangle into 4; new mid-edge vertices all have degree 6, so
// the cone structure is unchanged while T quadruples.
Triangulation subdivide(const Triangulation& t);

// All named entries plus a once-subdivided copy of each.
std::vector<CatalogEntry> catalog_entries();

inline constexpr int default_enumeration_bound = 16;

// Every triangulation with all vertex degrees <= 6 and at most max_t
// triangles, exactly once up to orientation-preserving isomorphism, sorted
// by triangle count then canonical code. Depth-first growth over slot
// gluings with degree pruning and canonical-code deduplication.
// Throws BoundExceeded when max_t exceeds the bound.
std::vector<Triangulation> enumerate_positive(int max_t,
                                              int bound = default_enumeration_bound);

// Independent second strategy for cross-checking: builds every dual tree of
// each admissible size, then completes the open slots by lowest-first
// matching. Returns the sorted canonical codes.
std::vector<std::vector<int>> enumerate_by_tree_matching(int max_t);

}  // namespace conesphere
