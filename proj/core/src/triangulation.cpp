#include "conesphere/triangulation.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "conesphere/errors.hpp"

namespace conesphere {

Triangulation Triangulation::from_gluing(std::vector<int> glue) {
  int n = int(glue.size());
  if (n == 0 || n % 3 != 0)
    throw MalformedGluing("slot count must be a positive multiple of 3");
  for (int s = 0; s < n; ++s) {
    if (glue[s] < 0 || glue[s] >= n)
      throw MalformedGluing("glued slot out of range");
    if (glue[s] == s)
      throw MalformedGluing("slot glued to itself");
    if (glue[glue[s]] != s)
      throw MalformedGluing("gluing is not an involution");
  }

  int T = n / 3;
  std::vector<bool> seen(T, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    int t = stack.back();
    stack.pop_back();
    for (int i = 0; i < 3; ++i) {
      int t2 = glue[3 * t + i] / 3;
      if (!seen[t2]) {
        seen[t2] = true;
        ++reached;
        stack.push_back(t2);
      }
    }
  }
  if (reached != T) throw Disconnected("triangulation is not connected");

  Triangulation tri;
  tri.glue_ = std::move(glue);
  tri.build_orbits();
  // E = 3T/2, F = T; sphere iff Euler characteristic is 2.
  if (tri.num_vertices() - 3 * T / 2 + T != 2)
    throw NonSpherical("surface is not a sphere");
  return tri;
}

Triangulation Triangulation::from_faces(const std::vector<std::vector<int>>& faces) {
  int T = int(faces.size());
  std::map<std::pair<int, int>, int> directed;
  for (int t = 0; t < T; ++t) {
    if (faces[t].size() != 3) throw MalformedGluing("face is not a triangle");
    for (int i = 0; i < 3; ++i) {
      std::pair<int, int> e{faces[t][i], faces[t][(i + 1) % 3]};
      if (e.first == e.second || !directed.emplace(e, 3 * t + i).second)
        throw MalformedGluing("directed edge repeated across faces");
    }
  }
  std::vector<int> glue(3 * T, -1);
  for (const auto& [e, s] : directed) {
    auto it = directed.find({e.second, e.first});
    if (it == directed.end())
      throw MalformedGluing("directed edge without its reversal");
    glue[s] = it->second;
  }
  return from_gluing(std::move(glue));
}

void Triangulation::build_orbits() {
  int n = num_slots();
  slot_vertex_.assign(n, -1);
  orbit_min_.clear();
  degree_.clear();
  for (int s = 0; s < n; ++s) {
    if (slot_vertex_[s] >= 0) continue;
    int v = int(orbit_min_.size());
    orbit_min_.push_back(s);
    int count = 0;
    int h = s;
    while (slot_vertex_[h] < 0) {
      slot_vertex_[h] = v;
      ++count;
      h = next_slot(glue_[h]);
    }
    degree_.push_back(count);
  }
}

std::vector<int> Triangulation::cone_vertices() const {
  std::vector<int> out;
  for (int v = 0; v < num_vertices(); ++v)
    if (degree_[v] != 6) out.push_back(v);
  return out;
}

bool Triangulation::is_combinatorially_positive() const {
  for (int d : degree_)
    if (d > 6) return false;
  return true;
}

std::vector<int> Triangulation::canonical_code() const {
  int T = num_triangles();
  int n = num_slots();
  std::vector<int> best;
  std::vector<int> tri_of_new(T), rot(T), new_of_old(T);
  std::vector<int> code(n);
  for (int root = 0; root < n; ++root) {
    std::fill(new_of_old.begin(), new_of_old.end(), -1);
    tri_of_new[0] = root / 3;
    rot[0] = root % 3;
    new_of_old[root / 3] = 0;
    int cnt = 1;
    bool worse = false;
    bool comparing = !best.empty();
    for (int nn = 0; nn < n; ++nn) {
      int j = nn / 3, e = nn % 3;
      int o = 3 * tri_of_new[j] + (rot[j] + e) % 3;
      int o2 = glue_[o];
      int t2 = o2 / 3;
      if (new_of_old[t2] < 0) {
        new_of_old[t2] = cnt;
        tri_of_new[cnt] = t2;
        rot[cnt] = o2 % 3;  // glued slot becomes slot 0 of the new triangle
        ++cnt;
      }
      int j2 = new_of_old[t2];
      code[nn] = 3 * j2 + (o2 % 3 - rot[j2] + 3) % 3;
      if (comparing) {
        if (code[nn] > best[nn]) { worse = true; break; }
        if (code[nn] < best[nn]) comparing = false;
      }
    }
    if (!worse && (best.empty() || code < best)) best = code;
  }
  return best;
}

bool Triangulation::is_isomorphic(const Triangulation& other) const {
  return num_triangles() == other.num_triangles() &&
         canonical_code() == other.canonical_code();
}

Triangulation Triangulation::mirrored() const {
  static const int rev[3] = {2, 1, 0};
  int T = num_triangles();
  std::vector<int> g2(3 * T);
  for (int t = 0; t < T; ++t)
    for (int i = 0; i < 3; ++i) {
      int o = glue_[3 * t + rev[i]];
      g2[3 * t + i] = 3 * (o / 3) + rev[o % 3];
    }
  return from_gluing(std::move(g2));
}

}  // namespace conesphere
