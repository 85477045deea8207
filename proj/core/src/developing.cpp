#include "conesphere/developing.hpp"

#include <algorithm>
#include <deque>

#include "conesphere/errors.hpp"

namespace conesphere {

SpanningTree spanning_tree(const Triangulation& t, int seed) {
  int V = t.num_vertices();
  int n = t.num_slots();
  std::vector<std::vector<int>> slots_of(V);
  for (int s = 0; s < n; ++s) slots_of[t.vertex_of_slot(s)].push_back(s);

  int root = ((seed % V) + V) % V;
  std::vector<bool> seen(V, false);
  seen[root] = true;
  std::deque<int> queue{root};
  SpanningTree out;
  out.cut.assign(n, false);
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int h : slots_of[v]) {
      int w = t.vertex_of_slot(t.partner(h));
      if (seen[w]) continue;
      seen[w] = true;
      queue.push_back(w);
      int rep = std::min(h, t.partner(h));
      out.edges.push_back(rep);
      out.cut[rep] = out.cut[t.partner(rep)] = true;
    }
  }
  std::sort(out.edges.begin(), out.edges.end());
  if (int(out.edges.size()) != V - 1)
    throw InternalInvariant("spanning tree does not span");
  return out;
}

DevelopedDisk cut_and_develop(const Triangulation& t, const SpanningTree& tree) {
  int T = t.num_triangles();
  int n = t.num_slots();
  DevelopedDisk disk;
  disk.tree = tree;
  disk.position.assign(n, EisInt{});
  disk.position[1] = EisInt(1);
  disk.position[2] = EisInt(1) + EisInt::omega();

  std::vector<bool> placed(T, false);
  placed[0] = true;
  std::deque<int> queue{0};
  int placed_count = 1;
  while (!queue.empty()) {
    int tr = queue.front();
    queue.pop_front();
    for (int i = 0; i < 3; ++i) {
      int h = 3 * tr + i;
      if (tree.is_cut(h)) continue;
      int h2 = t.partner(h);
      int t2 = h2 / 3;
      const EisInt& a = disk.position[h];
      const EisInt& b = disk.position[next_slot(h)];
      if (placed[t2]) {
        // the cut surface is simply connected, so re-entry must agree
        if (!(disk.position[h2] == b && disk.position[next_slot(h2)] == a))
          throw InternalInvariant("interior edge positions disagree");
        continue;
      }
      disk.position[h2] = b;
      disk.position[next_slot(h2)] = a;
      disk.position[next_slot(next_slot(h2))] =
          b + (a - b) * (EisInt(1) + EisInt::omega());
      placed[t2] = true;
      ++placed_count;
      queue.push_back(t2);
    }
  }
  if (placed_count != T) throw InternalInvariant("development did not reach every triangle");

  // boundary cycle: successive cut slots around the disk, from the smallest
  int start = tree.edges.empty() ? -1 : tree.edges.front();
  if (start >= 0) {
    int h = start;
    while (true) {
      disk.boundary.push_back(h);
      int g = next_slot(h);
      while (!tree.is_cut(g)) g = next_slot(t.partner(g));
      if (g == start) break;
      h = g;
    }
    if (int(disk.boundary.size()) != 2 * (t.num_vertices() - 1))
      throw InternalInvariant("boundary cycle has wrong length");
  }
  return disk;
}

std::vector<EisInt> edge_labels(const Triangulation& t, const DevelopedDisk& disk) {
  int n = t.num_slots();
  std::vector<EisInt> labels(n);
  for (int s = 0; s < n; ++s)
    labels[s] = disk.position[next_slot(s)] - disk.position[s];
  return labels;
}

std::map<std::pair<int, int>, UnitSixth> gluing_units(const Triangulation& t,
                                                      const DevelopedDisk& disk,
                                                      const std::vector<EisInt>& labels) {
  std::map<std::pair<int, int>, UnitSixth> out;
  for (int a : disk.tree.edges) {
    int b = t.partner(a);
    // labels have norm 1, so conj is inverse and the ratio stays in the ring
    EisInt u = labels[b] * labels[a].conj();
    auto unit = UnitSixth::from(u);
    if (!unit) throw NotAUnit("cut-pair label ratio " + u.str() + " is not a unit");
    out.emplace(std::make_pair(a, b), *unit);
  }
  return out;
}

namespace {

// Frame rotation picked up when the walk around a vertex crosses the edge at
// slot h. Interior crossings are frame-preserving; crossing the cut pair
// (a, b) with label(b) = u * label(a) rotates by -1/u from the a side and by
// -u from the b side.
EisInt crossing_rotation(const Triangulation& t,
                         const std::map<std::pair<int, int>, UnitSixth>& units, int h) {
  int a = std::min(h, t.partner(h));
  int b = std::max(h, t.partner(h));
  auto it = units.find({a, b});
  if (it == units.end()) return EisInt(1);
  UnitSixth u = it->second;
  return -(h == a ? u.inverse() : u).value();
}

// Around an ordinary (degree-6) vertex the transported outgoing labels sum
// to zero: the vertex stays at the centroid of its six neighbors. Returns
// the coefficient of each outgoing slot in that relation.
std::map<int, EisInt> flat_pin_row(const Triangulation& t,
                                   const std::map<std::pair<int, int>, UnitSixth>& units,
                                   int start_slot) {
  std::map<int, EisInt> coeff;
  EisInt rho(1);
  int h = start_slot;
  do {
    coeff[h] += rho;
    rho *= crossing_rotation(t, units, h);
    h = next_slot(t.partner(h));
  } while (h != start_slot);
  if (!(rho == EisInt(1)))
    throw InternalInvariant("holonomy around a flat vertex does not close");
  return coeff;
}

}  // namespace

ModuliChart moduli_chart(const Triangulation& t, const SpanningTree& tree) {
  int T = t.num_triangles();
  int n = t.num_slots();
  int m = int(t.cone_vertices().size());
  if (m < 3) throw DegenerateModuli("fewer than 3 cone points");

  DevelopedDisk disk = cut_and_develop(t, tree);
  std::vector<EisInt> labels = edge_labels(t, disk);
  auto units = gluing_units(t, disk, labels);

  // one variable per glued pair: label(a) for the pair's smaller slot a,
  // with label(b) = c * label(a), c = -1 interior / the gluing unit for cuts
  int E = n / 2;
  std::vector<int> pair_of(n);
  std::vector<EisFrac> pair_coeff(n);
  {
    int idx = 0;
    for (int a = 0; a < n; ++a) {
      int b = t.partner(a);
      if (a > b) continue;
      auto it = units.find({a, b});
      EisFrac c = it != units.end() ? EisFrac(it->second.value()) : EisFrac(-1);
      pair_of[a] = idx;
      pair_coeff[a] = EisFrac(1);
      pair_of[b] = idx;
      pair_coeff[b] = c;
      ++idx;
    }
  }

  // flat-vertex rows before assembly, so the total row count is known
  std::vector<std::map<int, EisInt>> pin_rows;
  for (int v = 0; v < t.num_vertices(); ++v) {
    if (t.degree(v) != 6) continue;
    int start = -1;
    for (int s = 0; s < n && start < 0; ++s)
      if (t.vertex_of_slot(s) == v) start = s;
    pin_rows.push_back(flat_pin_row(t, units, start));
  }

  Matrix sys(T + int(pin_rows.size()), E);
  for (int tr = 0; tr < T; ++tr)
    for (int i = 0; i < 3; ++i) {
      int s = 3 * tr + i;
      sys.at(tr, pair_of[s]) += pair_coeff[s];
    }
  for (int r = 0; r < int(pin_rows.size()); ++r)
    for (const auto& [s, c] : pin_rows[r])
      sys.at(T + r, pair_of[s]) += EisFrac(c) * pair_coeff[s];

  Matrix pair_basis = null_space(sys);  // E x d
  int d = pair_basis.cols();
  if (d != m - 2) throw InternalInvariant("chart dimension differs from cone count minus 2");

  ModuliChart chart;
  chart.dim = d;
  chart.tree = tree;
  chart.units = units;
  chart.own_labels = labels;

  // expand pair variables back to all 3T slot labels
  Matrix B(n, d);
  for (int s = 0; s < n; ++s)
    for (int k = 0; k < d; ++k) B.at(s, k) = pair_coeff[s] * pair_basis.at(pair_of[s], k);

  // pivot slots: lexicographically first rows of B that are independent
  {
    std::vector<std::pair<int, std::vector<EisFrac>>> red;  // (lead col, reduced row)
    for (int s = 0; s < n && int(chart.pivot_slots.size()) < d; ++s) {
      std::vector<EisFrac> v(d);
      for (int k = 0; k < d; ++k) v[k] = B.at(s, k);
      for (const auto& [lead, rv] : red) {
        if (v[lead].is_zero()) continue;
        EisFrac f = v[lead];
        for (int j = 0; j < d; ++j) v[j] -= f * rv[j];
      }
      int lead = -1;
      for (int j = 0; j < d && lead < 0; ++j)
        if (!v[j].is_zero()) lead = j;
      if (lead < 0) continue;
      EisFrac inv = v[lead].inverse();
      for (int j = 0; j < d; ++j) v[j] *= inv;
      red.emplace_back(lead, std::move(v));
      chart.pivot_slots.push_back(s);
    }
    if (int(chart.pivot_slots.size()) != d)
      throw InternalInvariant("basis rows do not reach full rank");
  }

  // normalize so the pivot rows form the identity: coordinates = pivot labels
  Matrix P(d, d);
  for (int r = 0; r < d; ++r)
    for (int k = 0; k < d; ++k) P.at(r, k) = B.at(chart.pivot_slots[r], k);
  chart.basis = B * inverse(P);

  chart.own_coords.reserve(d);
  for (int s : chart.pivot_slots) chart.own_coords.emplace_back(labels[s]);
  for (int s = 0; s < n; ++s) {
    EisFrac acc;
    for (int k = 0; k < d; ++k) acc += chart.basis.at(s, k) * chart.own_coords[k];
    if (!(acc == EisFrac(labels[s])))
      throw InternalInvariant("chart does not reproduce the surface's own labels");
  }

  // the full constraint system on all 3T labels, for external verification:
  // triangle closures, pair relations, and flat-vertex rows
  Matrix full(T + E + int(pin_rows.size()), n);
  for (int tr = 0; tr < T; ++tr)
    for (int i = 0; i < 3; ++i) full.at(tr, 3 * tr + i) = EisFrac(1);
  {
    int r = T;
    for (int a = 0; a < n; ++a) {
      int b = t.partner(a);
      if (a > b) continue;
      auto it = units.find({a, b});
      if (it != units.end()) {
        full.at(r, a) = EisFrac(it->second.value());  // u * label(a) = label(b)
        full.at(r, b) = EisFrac(-1);
      } else {
        full.at(r, a) = EisFrac(1);  // label(a) + label(b) = 0
        full.at(r, b) = EisFrac(1);
      }
      ++r;
    }
    for (const auto& row : pin_rows) {
      for (const auto& [s, c] : row) full.at(r, s) += EisFrac(c);
      ++r;
    }
  }
  chart.constraints = std::move(full);
  return chart;
}

ModuliChart moduli_chart(const Triangulation& t, int seed) {
  return moduli_chart(t, spanning_tree(t, seed));
}

Matrix chart_change(const Triangulation& t, const ModuliChart& from, const ModuliChart& to) {
  if (from.dim != to.dim) throw DimensionMismatch("charts have different dimensions");
  int T = t.num_triangles();
  int n = t.num_slots();
  int d = from.dim;

  // frame rotation of each triangle inside the target disk, relative to
  // triangle 0, accumulated across the source chart's cut pairs
  std::vector<EisInt> rho(T);
  std::vector<bool> have(T, false);
  rho[0] = EisInt(1);
  have[0] = true;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int tr = queue.front();
    queue.pop_front();
    for (int i = 0; i < 3; ++i) {
      int h = 3 * tr + i;
      if (to.tree.is_cut(h)) continue;
      int t2 = t.partner(h) / 3;
      if (have[t2]) continue;
      rho[t2] = rho[tr] * crossing_rotation(t, from.units, h);
      have[t2] = true;
      queue.push_back(t2);
    }
  }

  Matrix transported(n, d);
  for (int s = 0; s < n; ++s)
    for (int k = 0; k < d; ++k)
      transported.at(s, k) = EisFrac(rho[s / 3]) * from.basis.at(s, k);

  Matrix M(d, d);
  for (int r = 0; r < d; ++r)
    for (int k = 0; k < d; ++k) M.at(r, k) = transported.at(to.pivot_slots[r], k);

  if (!(to.basis * M == transported))
    throw InternalInvariant("transported basis leaves the target chart");
  for (int r = 0; r < d; ++r) {
    EisFrac acc;
    for (int k = 0; k < d; ++k) acc += M.at(r, k) * from.own_coords[k];
    if (!(acc == to.own_coords[r]))
      throw InternalInvariant("chart change does not map the base point");
  }
  return M;
}

}  // namespace conesphere
