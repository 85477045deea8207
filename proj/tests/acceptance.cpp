// Acceptance gate: runs every end-to-end guarantee the library makes and
// prints one [PASS]/[FAIL] line per criterion. Exits 0 only when all pass.
#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "conesphere/catalog.hpp"
#include "conesphere/developing.hpp"
#include "conesphere/eisenstein.hpp"
#include "conesphere/errors.hpp"
#include "conesphere/hermitian.hpp"
#include "conesphere/json_io.hpp"
#include "conesphere/moduli.hpp"
#include "conesphere/triangulation.hpp"

namespace fs = std::filesystem;
using namespace conesphere;
using Clock = std::chrono::steady_clock;

namespace {

bool g_all_ok = true;

void report(bool ok, const std::string& label) {
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << label << "\n";
  g_all_ok = g_all_ok && ok;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f s", s);
  return buf;
}

// everything the criteria need from one surface, computed once
struct Analysis {
  int triangles{0};
  int cone_points{0};
  int chart_dim{0};
  Signature sig;
  BigRat norm;
  int unit_pairs{-1};       // cut pairs whose label ratio was a sixth root of unity
  bool conditions_ok{false};
  bool form_integral{false};
  bool labels_unit{false};  // every edge label in the lattice with norm 1
  bool ok{false};           // the pipeline ran to completion
  std::string error;
};

Analysis analyze_surface(const Triangulation& t) {
  Analysis a;
  a.triangles = t.num_triangles();
  try {
    DeficitList d = DeficitList::from_triangulation(t);
    a.cone_points = d.size();
    a.conditions_ok = check_condition1(d).empty() && check_condition2(d).empty();

    DevelopedDisk disk = cut_and_develop(t, spanning_tree(t, 0));
    std::vector<EisInt> labels = edge_labels(t, disk);
    a.labels_unit = true;
    for (const EisInt& f : labels) a.labels_unit = a.labels_unit && f.norm() == 1;
    auto units = gluing_units(t, disk, labels);
    bool units_ok = int(units.size()) == t.num_vertices() - 1;
    for (const auto& [pair, u] : units) units_ok = units_ok && u.value().is_unit();
    a.unit_pairs = units_ok ? int(units.size()) : -1;

    ModuliChart chart = moduli_chart(t, 0);
    a.chart_dim = chart.dim;
    Matrix h = restrict_form(area_form_ambient(t), chart);
    a.sig = signature(h);
    a.norm = evaluate(h, chart.own_coords);
    a.form_integral = entries_integral(h);
    a.ok = true;
  } catch (const std::exception& e) {
    a.error = e.what();
  }
  return a;
}

struct CliResult {
  std::string out;
  int exit_code{-1};
};

CliResult run_cli(const std::string& args) {
  CliResult r;
  std::string cmd = std::string(CONESPHERE_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

int main() {
  // ---- shared pre-pass: full census to 16 triangles, catalog at seed 0 ----
  Clock::time_point census_start = Clock::now();
  std::vector<Triangulation> census = enumerate_positive(16);
  std::vector<Analysis> census_analysis;
  census_analysis.reserve(census.size());
  for (const Triangulation& t : census) census_analysis.push_back(analyze_surface(t));

  std::vector<CatalogEntry> entries = catalog_entries();
  std::vector<Analysis> catalog_analysis;
  catalog_analysis.reserve(entries.size());
  for (const CatalogEntry& entry : entries)
    catalog_analysis.push_back(analyze_surface(entry.triangulation));
  double shared_time = seconds_since(census_start);

  // 1. squared-norm identity: the surface's own coordinates have H(V,V) = 3T,
  //    across the whole catalog and every enumerated surface with T <= 12
  {
    int checked = 0, failed = 0;
    for (size_t k = 0; k < entries.size(); ++k) {
      ++checked;
      const Analysis& a = catalog_analysis[k];
      failed += !(a.ok && a.norm == 3 * a.triangles);
    }
    int census_checked = 0;
    for (const Analysis& a : census_analysis) {
      if (a.triangles > 12) continue;
      ++checked;
      ++census_checked;
      failed += !(a.ok && a.norm == 3 * a.triangles);
    }
    bool ok = failed == 0 && shared_time < 60.0;
    std::ostringstream label;
    label << "norm identity H(V,V) = 3T: " << entries.size() << " catalog + "
          << census_checked << " enumerated surfaces, " << failed
          << " failures, computed in " << fmt_seconds(shared_time) << " (limit 60 s)";
    report(ok, label.str());
  }

  // 2. signature (1, m-3, 0) on the same surfaces; icosahedron is (1, 9, 0)
  {
    int failed = 0;
    for (const Analysis& a : catalog_analysis)
      failed += !(a.ok && a.sig == Signature{1, a.cone_points - 3, 0});
    for (const Analysis& a : census_analysis) {
      if (a.triangles > 12) continue;
      failed += !(a.ok && a.sig == Signature{1, a.cone_points - 3, 0});
    }
    Analysis icosa = analyze_surface(icosahedron().triangulation);
    bool icosa_ok = icosa.ok && icosa.sig == Signature{1, 9, 0};
    std::ostringstream label;
    label << "signature (1, m-3, 0) on all of the above, icosahedron (1,9,0): " << failed
          << " failures";
    report(failed == 0 && icosa_ok, label.str());
  }

  // 3. total curvature: deficits in units of pi/3 sum to 12 on every census surface
  {
    int failed = 0;
    for (const Triangulation& t : census) {
      int total = 0;
      for (int deg : t.degrees()) total += 6 - deg;
      failed += total != 12;
    }
    std::ostringstream label;
    label << "curvature sums to 12 across the census: " << census.size() << " surfaces, "
          << failed << " failures";
    report(failed == 0, label.str());
  }

  // 4. chart dimension m-2 for every surface, census and catalog
  {
    int failed = 0;
    for (const Analysis& a : census_analysis)
      failed += !(a.ok && a.chart_dim == a.cone_points - 2);
    for (const Analysis& a : catalog_analysis)
      failed += !(a.ok && a.chart_dim == a.cone_points - 2);
    std::ostringstream label;
    label << "chart dimension equals cone points minus 2: "
          << census_analysis.size() + catalog_analysis.size() << " surfaces, " << failed
          << " failures";
    report(failed == 0, label.str());
  }

  // 5. every cut-pair label ratio in every census development is a sixth root of unity
  {
    int failed = 0;
    long pairs = 0;
    for (const Analysis& a : census_analysis) {
      if (!a.ok || a.unit_pairs < 0) {
        ++failed;
        continue;
      }
      pairs += a.unit_pairs;
    }
    std::ostringstream label;
    label << "gluing units are sixth roots of unity: " << pairs << " cut pairs across "
          << census.size() << " developments, " << failed << " failures";
    report(failed == 0, label.str());
  }

  // 6. lattice coordinates. Hard requirement: every developed position and
  //    edge label is a lattice vector (labels of unit length), census and
  //    catalog alike. The restricted form's entries are only *expected* in the
  //    lattice, so that half is a per-entry report: any non-integral catalog
  //    entry is named here rather than silently passed over or silently failed.
  {
    int label_failures = 0;
    for (const Analysis& a : census_analysis) label_failures += !(a.ok && a.labels_unit);
    for (const Analysis& a : catalog_analysis) label_failures += !(a.ok && a.labels_unit);
    std::vector<std::string> non_integral;
    for (size_t k = 0; k < entries.size(); ++k)
      if (!catalog_analysis[k].ok || !catalog_analysis[k].form_integral)
        non_integral.push_back(entries[k].name);
    std::ostringstream label;
    label << "lattice coordinates: developed labels in Z[w] with unit norm on "
          << census_analysis.size() + catalog_analysis.size() << " surfaces ("
          << label_failures << " failures); restricted form integral for "
          << entries.size() - non_integral.size() << "/" << entries.size()
          << " catalog entries";
    if (!non_integral.empty()) {
      label << ", non-integral:";
      for (const std::string& name : non_integral) label << " " << name;
    }
    report(label_failures == 0, label.str());
  }

  // 7. the cut used to develop does not matter: equal norms across three seeds,
  //    and the explicit seed-0 -> seed-1 coordinate change is an isometry
  {
    int failed = 0;
    for (const CatalogEntry& entry : entries) {
      try {
        const Triangulation& t = entry.triangulation;
        ModuliChart c0 = moduli_chart(t, 0);
        ModuliChart c1 = moduli_chart(t, 1);
        ModuliChart c2 = moduli_chart(t, 2);
        Matrix amb = area_form_ambient(t);
        Matrix h0 = restrict_form(amb, c0);
        Matrix h1 = restrict_form(amb, c1);
        Matrix h2 = restrict_form(amb, c2);
        BigRat n0 = evaluate(h0, c0.own_coords);
        bool ok = n0 == evaluate(h1, c1.own_coords) && n0 == evaluate(h2, c2.own_coords) &&
                  n0 == 3 * t.num_triangles();
        Matrix m = chart_change(t, c0, c1);
        ok = ok && congruence_check(h1, h0, m);
        failed += !ok;
      } catch (const std::exception&) {
        ++failed;
      }
    }
    std::ostringstream label;
    label << "cut invariance: equal norms across 3 seeds and an exact chart-change "
             "isometry for all "
          << entries.size() << " catalog entries, " << failed << " failures";
    report(failed == 0, label.str());
  }

  // 8. deficit lattice conditions: no census list has an uncovered violation,
  //    and the crafted list (2/5, 2/5, 8/5, 8/5) is reported as violating
  {
    int failed = 0;
    for (const Analysis& a : census_analysis) failed += !(a.ok && a.conditions_ok);
    DeficitList crafted = DeficitList::from_values(
        {BigRat(2, 5), BigRat(2, 5), BigRat(8, 5), BigRat(8, 5)});
    auto crafted_bad = check_condition2(crafted);
    bool crafted_ok = crafted_bad.size() == 1 && crafted_bad[0].ratio == BigRat(10, 3) &&
                      check_condition1(crafted).empty();
    std::ostringstream label;
    label << "deficit conditions: 0 uncovered violations in the census (" << failed
          << " failures) and the 2/5-pair list is flagged under the equal-pair rule";
    report(failed == 0 && crafted_ok, label.str());
  }

  // 9. two independent enumeration strategies agree for T <= 8
  {
    Clock::time_point start = Clock::now();
    std::vector<Triangulation> grown = enumerate_positive(8);
    std::vector<std::vector<int>> matched = enumerate_by_tree_matching(8);
    bool ok = grown.size() == matched.size();
    for (size_t k = 0; ok && k < grown.size(); ++k)
      ok = grown[k].canonical_code() == matched[k];
    double elapsed = seconds_since(start);
    std::ostringstream label;
    label << "independent enumerations agree for T <= 8: " << grown.size() << " vs "
          << matched.size() << " classes in " << fmt_seconds(elapsed) << " (limit 120 s)";
    report(ok && elapsed < 120.0, label.str());
  }

  // 10. the command-line pipeline is byte-deterministic across repeated runs
  {
    fs::path dir = fs::temp_directory_path() / "conesphere_acceptance";
    fs::create_directories(dir);
    fs::path icosa = dir / "icosa.json";
    fs::path tetra = dir / "tetra.json";
    save_triangulation(icosahedron().triangulation, icosa.string());
    save_triangulation(tetrahedron().triangulation, tetra.string());
    fs::path svg = dir / "tetra.svg";

    std::string analyze_cmd = "analyze --seed 0 " + icosa.string();
    std::string develop_cmd = "develop --seed 0 --svg " + svg.string() + " " + tetra.string();

    bool ok = true;
    std::string analyze_out, develop_out, svg_out;
    for (int run = 0; run < 3; ++run) {
      CliResult a = run_cli(analyze_cmd);
      CliResult d = run_cli(develop_cmd);
      std::string svg_body;
      try {
        svg_body = read_text_file(svg.string());
      } catch (const Error&) {
        ok = false;
      }
      if (run == 0) {
        analyze_out = a.out;
        develop_out = d.out;
        svg_out = svg_body;
        ok = ok && a.exit_code == 0 && d.exit_code == 0 &&
             a.out.rfind("dim=10 ", 0) == 0 && !svg_body.empty();
      } else {
        ok = ok && a.out == analyze_out && d.out == develop_out && svg_body == svg_out;
      }
    }
    report(ok, "command-line analyze and develop are byte-identical across 3 runs");
  }

  std::cout << (g_all_ok ? "acceptance: all criteria passed"
                         : "acceptance: at least one criterion failed")
            << "\n";
  return g_all_ok ? 0 : 1;
}
