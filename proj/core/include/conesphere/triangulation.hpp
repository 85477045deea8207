#pragma once

#include <string>
#include <vector>

namespace conesphere {

// Slots index triangle corners: slot 3t+i is corner i of triangle t.
// Edge i of a triangle runs from corner i to corner (i+1)%3, counterclockwise.
inline int next_slot(int s) { return s - s % 3 + (s + 1) % 3; }
inline int slot_triangle(int s) { return s / 3; }

// An oriented closed triangulated surface, stored as a fixed-point-free
// involution on slots: slot s is glued to glue[s], with the two edges
// traversed in opposite directions.
class Triangulation {
 public:
  // Empty placeholder; every populated instance comes from a factory below.
  Triangulation() = default;

  // Validates and canonicalizes; throws MalformedGluing, Disconnected,
  // or NonSpherical (checked in that order).
  static Triangulation from_gluing(std::vector<int> glue);

  // Builds the gluing from faces given as CCW vertex triples. Every directed
  // edge (u,v) must appear exactly once across all faces.
  static Triangulation from_faces(const std::vector<std::vector<int>>& faces);

  int num_triangles() const { return int(glue_.size()) / 3; }
  int num_slots() const { return int(glue_.size()); }
  int partner(int s) const { return glue_[s]; }
  const std::vector<int>& gluing() const { return glue_; }

  // Vertices are orbits of s -> next(partner(s)), the clockwise walk around
  // the tail corner of s. Vertex ids are assigned by ascending minimum slot.
  int num_vertices() const { return int(orbit_min_.size()); }
  int vertex_of_slot(int s) const { return slot_vertex_[s]; }
  int degree(int v) const { return degree_[v]; }
  const std::vector<int>& degrees() const { return degree_; }

  // Cone deficit at vertex v in units of pi: (6 - degree)/3.
  // A vertex is a cone point iff its degree differs from 6.
  std::vector<int> cone_vertices() const;

  // True iff every vertex has degree at most 6.
  bool is_combinatorially_positive() const;

  // Lexicographically minimal BFS relabeling code over all root slots.
  // Equal codes characterize orientation-preserving isomorphism.
  std::vector<int> canonical_code() const;
  bool is_isomorphic(const Triangulation& other) const;

  // The same surface with reversed orientation.
  Triangulation mirrored() const;

  bool operator==(const Triangulation& other) const { return glue_ == other.glue_; }

 private:
  void build_orbits();

  std::vector<int> glue_;
  std::vector<int> slot_vertex_;
  std::vector<int> orbit_min_;
  std::vector<int> degree_;
};

}  // namespace conesphere
