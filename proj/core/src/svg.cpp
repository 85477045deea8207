#include "conesphere/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>

namespace conesphere {

namespace {

constexpr double kScale = 72.0;
constexpr double kMargin = 24.0;

const char* kPalette[] = {"#c0392b", "#2471a3", "#1e8449", "#b7950b", "#7d3c98",
                          "#d35400", "#148f77", "#884ea0", "#a04000", "#1a5276",
                          "#7b241c", "#196f3d"};
constexpr int kPaletteSize = int(sizeof(kPalette) / sizeof(kPalette[0]));

std::string num(double v) {
  char buf[48];
  // fixed precision keeps repeated renders byte-identical
  std::snprintf(buf, sizeof(buf), "%.2f", v + 0.0);  // normalize -0.0
  return buf;
}

}  // namespace

std::string render_svg(const Triangulation& t, const DevelopedDisk& disk) {
  int n = t.num_slots();
  double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  std::vector<std::pair<double, double>> pt(n);
  for (int s = 0; s < n; ++s) {
    auto z = disk.position[s].embed();
    pt[s] = {z.real(), z.imag()};
    min_x = std::min(min_x, pt[s].first);
    max_x = std::max(max_x, pt[s].first);
    min_y = std::min(min_y, pt[s].second);
    max_y = std::max(max_y, pt[s].second);
  }
  auto X = [&](int s) { return (pt[s].first - min_x) * kScale + kMargin; };
  auto Y = [&](int s) { return (max_y - pt[s].second) * kScale + kMargin; };
  double width = (max_x - min_x) * kScale + 2 * kMargin;
  double height = (max_y - min_y) * kScale + 2 * kMargin;

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width)
      << "\" height=\"" << num(height) << "\" viewBox=\"0 0 " << num(width) << " "
      << num(height) << "\">\n";

  for (int tr = 0; tr < t.num_triangles(); ++tr) {
    svg << "  <polygon points=\"";
    for (int i = 0; i < 3; ++i) {
      if (i) svg << " ";
      svg << num(X(3 * tr + i)) << "," << num(Y(3 * tr + i));
    }
    svg << "\" fill=\"#f4f1ea\" stroke=\"none\"/>\n";
  }

  for (int s = 0; s < n; ++s) {
    if (disk.tree.is_cut(s) || s > t.partner(s)) continue;
    svg << "  <line x1=\"" << num(X(s)) << "\" y1=\"" << num(Y(s)) << "\" x2=\""
        << num(X(next_slot(s))) << "\" y2=\"" << num(Y(next_slot(s)))
        << "\" stroke=\"#b9b2a4\" stroke-width=\"1\"/>\n";
  }

  for (int k = 0; k < int(disk.tree.edges.size()); ++k) {
    int a = disk.tree.edges[k];
    const char* color = kPalette[k % kPaletteSize];
    for (int s : {a, t.partner(a)}) {
      svg << "  <line x1=\"" << num(X(s)) << "\" y1=\"" << num(Y(s)) << "\" x2=\""
          << num(X(next_slot(s))) << "\" y2=\"" << num(Y(next_slot(s))) << "\" stroke=\""
          << color << "\" stroke-width=\"3\" stroke-linecap=\"round\"/>\n";
    }
  }

  // one marker per distinct developed position of each cone vertex
  std::map<std::string, std::pair<int, int>> marks;  // position key -> (slot, deficit)
  for (int s = 0; s < n; ++s) {
    int deficit = 6 - t.degree(t.vertex_of_slot(s));
    if (deficit == 0) continue;
    marks.emplace(disk.position[s].str(), std::make_pair(s, deficit));
  }
  for (const auto& [key, mark] : marks) {
    auto [s, deficit] = mark;
    svg << "  <circle cx=\"" << num(X(s)) << "\" cy=\"" << num(Y(s))
        << "\" r=\"7\" fill=\"#ffffff\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
    svg << "  <text x=\"" << num(X(s)) << "\" y=\"" << num(Y(s) + 3.5)
        << "\" font-family=\"sans-serif\" font-size=\"10\" text-anchor=\"middle\" "
           "fill=\"#333333\">"
        << deficit << "</text>\n";
  }

  svg << "</svg>\n";
  return svg.str();
}

}  // namespace conesphere
