#include "conesphere/catalog.hpp"

#include <algorithm>
#include <map>

#include "conesphere/errors.hpp"

namespace conesphere {

namespace {

CatalogEntry make_entry(std::string name, Triangulation t,
                        std::vector<std::pair<long, int>> deficit_counts) {
  CatalogEntry e;
  e.name = std::move(name);
  e.expected_triangles = t.num_triangles();
  e.triangulation = std::move(t);
  for (const auto& [numerator, count] : deficit_counts)
    for (int i = 0; i < count; ++i) e.expected_deficits.emplace_back(BigRat(numerator) / 3);
  std::sort(e.expected_deficits.begin(), e.expected_deficits.end());
  e.expected_cone_points = int(e.expected_deficits.size());
  return e;
}

}  // namespace

CatalogEntry double_triangle() {
  return make_entry("double_triangle", Triangulation::from_gluing({5, 4, 3, 2, 1, 0}),
                    {{4, 3}});
}

CatalogEntry tetrahedron() {
  return make_entry("tetrahedron",
                    Triangulation::from_faces({{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}}),
                    {{3, 4}});
}

CatalogEntry octahedron() {
  return make_entry("octahedron",
                    Triangulation::from_faces({{0, 1, 2},
                                               {0, 2, 3},
                                               {0, 3, 4},
                                               {0, 4, 1},
                                               {5, 2, 1},
                                               {5, 3, 2},
                                               {5, 4, 3},
                                               {5, 1, 4}}),
                    {{2, 6}});
}

CatalogEntry icosahedron() {
  return make_entry("icosahedron",
                    Triangulation::from_faces({{0, 1, 2},   {0, 2, 3},   {0, 3, 4},
                                               {0, 4, 5},   {0, 5, 1},   {1, 5, 6},
                                               {1, 6, 7},   {1, 7, 2},   {2, 7, 8},
                                               {2, 8, 3},   {3, 8, 9},   {3, 9, 4},
                                               {4, 9, 10},  {4, 10, 5},  {5, 10, 6},
                                               {6, 10, 11}, {6, 11, 7},  {7, 11, 8},
                                               {8, 11, 9},  {9, 11, 10}}),
                    {{1, 12}});
}

CatalogEntry bipyramid(int n) {
  if (n > 6) throw DegreeTooHigh("bipyramid apex degree exceeds 6");
  if (n < 2) throw Error("bipyramid needs at least 2 faces per apex");
  // top triangles i: (apex, v_i, v_{i+1}); bottom n+i: (apex', v_{i+1}, v_i)
  int T = 2 * n;
  std::vector<int> glue(3 * T, -1);
  auto pair = [&](int x, int y) { glue[x] = y; glue[y] = x; };
  for (int i = 0; i < n; ++i) {
    int j = (i + 1) % n;
    pair(3 * i + 1, 3 * (n + i) + 1);          // equator
    pair(3 * i + 2, 3 * j + 0);                // top fan
    pair(3 * (n + i) + 0, 3 * (n + j) + 2);    // bottom fan
  }
  std::vector<std::pair<long, int>> deficits{{2, n}};  // equator vertices, degree 4
  if (n < 6) deficits.push_back({6 - n, 2});           // apexes
  return make_entry("bipyramid" + std::to_string(n),
                    Triangulation::from_gluing(std::move(glue)), std::move(deficits));
}

Triangulation subdivide(const Triangulation& t) {
  // children of parent p: corner triangles 4p+i around corner i, middle 4p+3.
  // corner i slots: 0: c_i -> m_i, 1: m_i -> m_{i-1}, 2: m_{i-1} -> c_i
  // middle slots:   i: m_i -> m_{i+1}
  int T = t.num_triangles();
  std::vector<int> glue(12 * T, -1);
  auto pair = [&](int x, int y) { glue[x] = y; glue[y] = x; };
  for (int p = 0; p < T; ++p) {
    for (int i = 0; i < 3; ++i)
      pair(3 * (4 * p + 3) + i, 3 * (4 * p + (i + 1) % 3) + 1);
    for (int i = 0; i < 3; ++i) {
      int h2 = t.partner(3 * p + i);
      int p2 = h2 / 3, i2 = h2 % 3;
      // the two halves of edge (p, i) meet the partner's halves crosswise
      pair(3 * (4 * p + i) + 0, 3 * (4 * p2 + (i2 + 1) % 3) + 2);
    }
  }
  return Triangulation::from_gluing(std::move(glue));
}

std::vector<CatalogEntry> catalog_entries() {
  std::vector<CatalogEntry> base;
  base.push_back(double_triangle());
  base.push_back(tetrahedron());
  base.push_back(octahedron());
  base.push_back(icosahedron());
  for (int n = 2; n <= 6; ++n) base.push_back(bipyramid(n));

  std::vector<CatalogEntry> out = base;
  for (const CatalogEntry& e : base) {
    CatalogEntry sub;
    sub.name = "subdivided_" + e.name;
    sub.triangulation = subdivide(e.triangulation);
    sub.expected_triangles = 4 * e.expected_triangles;
    sub.expected_cone_points = e.expected_cone_points;
    sub.expected_deficits = e.expected_deficits;
    out.push_back(std::move(sub));
  }
  return out;
}

namespace {

// Union-find over corners with an undo log instead of path compression, so
// depth-first search can roll back. Merging corner classes tracks vertex
// degrees before the gluing is complete.
class RollbackDsu {
 public:
  explicit RollbackDsu(int n) : parent_(n), size_(n, 1) {
    for (int i = 0; i < n; ++i) parent_[i] = i;
  }

  int find(int x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }

  // Returns {merged, resulting class size}; size 0 when already joined.
  std::pair<bool, int> unite(int a, int b) {
    int ra = find(a), rb = find(b);
    if (ra == rb) {
      log_.push_back(-1);
      return {false, 0};
    }
    if (size_[ra] < size_[rb]) std::swap(ra, rb);
    parent_[rb] = ra;
    size_[ra] += size_[rb];
    log_.push_back(rb);
    return {true, size_[ra]};
  }

  int mark() const { return int(log_.size()); }

  void rollback(int mark) {
    while (int(log_.size()) > mark) {
      int rb = log_.back();
      log_.pop_back();
      if (rb < 0) continue;
      size_[parent_[rb]] -= size_[rb];
      parent_[rb] = rb;
    }
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<int> log_;
};

// Depth-first growth: always glue the lowest unglued slot, either to a fresh
// triangle (attached by its slot 0) or to a later unglued slot. A completed
// gluing is a sphere iff the running deficit sum S = sum(6 - class size)
// equals 12.
class GrowthEnumerator {
 public:
  explicit GrowthEnumerator(int max_t)
      : max_t_(max_t), glue_(3 * max_t, -1), dsu_(3 * max_t) {}

  std::map<std::vector<int>, std::vector<int>> run() {
    rec();
    return std::move(found_);
  }

 private:
  int glue_pair(int a, int b, int& merges) {
    glue_[a] = b;
    glue_[b] = a;
    int mark = dsu_.mark();
    auto [m1, s1] = dsu_.unite(next_slot(a), b);
    auto [m2, s2] = dsu_.unite(next_slot(b), a);
    merges = int(m1) + int(m2);
    deficit_sum_ -= 6 * merges;
    degree_ok_ = s1 <= 6 && s2 <= 6;
    return mark;
  }

  void unglue_pair(int a, int b, int mark, int merges) {
    dsu_.rollback(mark);
    glue_[a] = glue_[b] = -1;
    deficit_sum_ += 6 * merges;
  }

  void rec() {
    int s = -1;
    for (int x = 0; x < 3 * placed_ && s < 0; ++x)
      if (glue_[x] < 0) s = x;
    if (s < 0) {
      if (deficit_sum_ == 12) {
        std::vector<int> g(glue_.begin(), glue_.begin() + 3 * placed_);
        Triangulation t = Triangulation::from_gluing(g);
        found_.emplace(t.canonical_code(), std::move(g));
      }
      return;
    }
    if (placed_ < max_t_) {
      int b = 3 * placed_;
      ++placed_;
      deficit_sum_ += 15;
      int merges = 0;
      int mark = glue_pair(s, b, merges);
      if (degree_ok_ && deficit_sum_ + 15 * (max_t_ - placed_) >= 12) rec();
      unglue_pair(s, b, mark, merges);
      deficit_sum_ -= 15;
      --placed_;
    }
    int open = 0;
    for (int x = 0; x < 3 * placed_; ++x)
      if (glue_[x] < 0) ++open;
    for (int b = s + 1; b < 3 * placed_; ++b) {
      if (glue_[b] >= 0) continue;
      int merges = 0;
      int mark = glue_pair(s, b, merges);
      if (degree_ok_) {
        bool feasible = deficit_sum_ + 15 * (max_t_ - placed_) >= 12;
        if (placed_ == max_t_ &&
            (deficit_sum_ < 12 || deficit_sum_ - 12 > 6 * (open - 2)))
          feasible = false;
        if (feasible) rec();
      }
      unglue_pair(s, b, mark, merges);
    }
  }

  int max_t_;
  int placed_{1};
  int deficit_sum_{15};
  bool degree_ok_{true};
  std::vector<int> glue_;
  RollbackDsu dsu_;
  std::map<std::vector<int>, std::vector<int>> found_;  // canonical code -> gluing
};

}  // namespace

namespace {

// triangle count first, canonical code second
bool code_less(const std::vector<int>& x, const std::vector<int>& y) {
  if (x.size() != y.size()) return x.size() < y.size();
  return x < y;
}

}  // namespace

std::vector<Triangulation> enumerate_positive(int max_t, int bound) {
  if (max_t < 1) throw Error("triangle bound must be positive");
  if (max_t > bound)
    throw BoundExceeded("requested " + std::to_string(max_t) + " exceeds bound " +
                        std::to_string(bound));
  auto found = GrowthEnumerator(max_t).run();
  std::vector<std::pair<std::vector<int>, std::vector<int>>> rows;  // (code, gluing)
  rows.reserve(found.size());
  for (auto& [code, gluing] : found) rows.emplace_back(code, std::move(gluing));
  std::sort(rows.begin(), rows.end(),
            [](const auto& x, const auto& y) { return code_less(x.first, y.first); });
  std::vector<Triangulation> out;
  out.reserve(rows.size());
  for (auto& row : rows) out.push_back(Triangulation::from_gluing(std::move(row.second)));
  return out;
}

namespace {

class TreeMatchingEnumerator {
 public:
  explicit TreeMatchingEnumerator(int max_t)
      : max_t_(max_t), glue_(3 * max_t, -1), dsu_(3 * max_t) {}

  std::vector<std::vector<int>> run() {
    for (int target = 2; target <= max_t_; target += 2) grow(1, target);
    std::vector<std::vector<int>> codes;
    codes.reserve(found_.size());
    for (auto& entry : found_) codes.push_back(entry.first);
    std::sort(codes.begin(), codes.end(), code_less);
    return codes;
  }

 private:
  void grow(int placed, int target) {
    if (placed == target) {
      match(target);
      return;
    }
    for (int s = 0; s < 3 * placed; ++s) {
      if (glue_[s] >= 0) continue;
      int b = 3 * placed;
      glue_[s] = b;
      glue_[b] = s;
      int mark = dsu_.mark();
      auto [m1, s1] = dsu_.unite(next_slot(s), b);
      auto [m2, s2] = dsu_.unite(next_slot(b), s);
      int merges = int(m1) + int(m2);
      deficit_sum_ += 15 - 6 * merges;
      if (s1 <= 6 && s2 <= 6) grow(placed + 1, target);
      dsu_.rollback(mark);
      deficit_sum_ -= 15 - 6 * merges;
      glue_[s] = glue_[b] = -1;
    }
  }

  void match(int target) {
    int s = -1;
    for (int x = 0; x < 3 * target && s < 0; ++x)
      if (glue_[x] < 0) s = x;
    if (s < 0) {
      if (deficit_sum_ == 12) {
        std::vector<int> g(glue_.begin(), glue_.begin() + 3 * target);
        found_[Triangulation::from_gluing(std::move(g)).canonical_code()]++;
      }
      return;
    }
    for (int b = s + 1; b < 3 * target; ++b) {
      if (glue_[b] >= 0) continue;
      glue_[s] = b;
      glue_[b] = s;
      int mark = dsu_.mark();
      auto [m1, s1] = dsu_.unite(next_slot(s), b);
      auto [m2, s2] = dsu_.unite(next_slot(b), s);
      int merges = int(m1) + int(m2);
      deficit_sum_ -= 6 * merges;
      if (s1 <= 6 && s2 <= 6 && deficit_sum_ >= 12) match(target);
      dsu_.rollback(mark);
      deficit_sum_ += 6 * merges;
      glue_[s] = glue_[b] = -1;
    }
  }

  int max_t_;
  int deficit_sum_{15};
  std::vector<int> glue_;
  RollbackDsu dsu_;
  std::map<std::vector<int>, long> found_;
};

}  // namespace

std::vector<std::vector<int>> enumerate_by_tree_matching(int max_t) {
  if (max_t < 1) throw Error("triangle bound must be positive");
  return TreeMatchingEnumerator(max_t).run();
}

}  // namespace conesphere
