// Command-line front end: validate gluing files, run the full development /
// form / signature pipeline, render developed disks to SVG, check deficit
// lattice conditions, and write an enumerated census with invariant sweep.
//
// Exit codes: 0 success, 1 invalid input, 2 internal invariant failure.

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "conesphere/catalog.hpp"
#include "conesphere/developing.hpp"
#include "conesphere/eisenstein.hpp"
#include "conesphere/errors.hpp"
#include "conesphere/hermitian.hpp"
#include "conesphere/json_io.hpp"
#include "conesphere/moduli.hpp"
#include "conesphere/svg.hpp"
#include "conesphere/triangulation.hpp"
#include "json.hpp"

namespace cs = conesphere;

namespace {

std::string run_length(const std::vector<cs::BigRat>& values) {
  std::string out = "[";
  for (size_t i = 0; i < values.size();) {
    size_t j = i;
    while (j < values.size() && values[j] == values[i]) ++j;
    if (i) out += ", ";
    out += cs::rational_str(values[i]) + " x" + std::to_string(j - i);
    i = j;
  }
  return out + "]";
}

std::string signature_str(const cs::Signature& s) {
  std::ostringstream out;
  out << "(" << s.positive << "," << s.negative << "," << s.zero << ")";
  return out.str();
}

std::vector<std::string> deficit_strings(const std::vector<cs::BigRat>& values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(cs::rational_str(v));
  return out;
}

// deficits (6-k)/3 of every vertex with degree != 6, negative ones included,
// so invalid-for-the-pipeline surfaces can still be described
std::vector<cs::BigRat> raw_deficits(const cs::Triangulation& t) {
  std::vector<cs::BigRat> out;
  for (int k : t.degrees())
    if (k != 6) out.push_back(cs::BigRat(6 - k) / 3);
  std::sort(out.begin(), out.end());
  return out;
}

nlohmann::json form_to_json(const cs::Matrix& h) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < h.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < h.cols(); ++j) row.push_back(h.at(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

void print_form(std::ostream& out, const cs::Matrix& h) {
  out << "form:\n";
  for (int i = 0; i < h.rows(); ++i) {
    out << "[";
    for (int j = 0; j < h.cols(); ++j) {
      if (j) out << ", ";
      out << h.at(i, j).str();
    }
    out << "]\n";
  }
}

int cmd_validate(const std::string& file, bool json) {
  cs::Triangulation t = cs::load_triangulation(file);
  std::vector<cs::BigRat> deficits = raw_deficits(t);
  std::vector<cs::BigRat> degrees;  // reuse the run-length printer
  {
    std::vector<int> sorted = t.degrees();
    std::sort(sorted.begin(), sorted.end());
    for (int k : sorted) degrees.emplace_back(k);
  }
  bool positive = t.is_combinatorially_positive();
  int euler = t.num_vertices() - 3 * t.num_triangles() / 2 + t.num_triangles();
  if (json) {
    nlohmann::json doc;
    doc["triangles"] = t.num_triangles();
    doc["vertices"] = t.num_vertices();
    doc["edges"] = 3 * t.num_triangles() / 2;
    doc["euler"] = euler;
    doc["degrees"] = t.degrees();
    doc["positive"] = positive;
    doc["cone_points"] = int(deficits.size());
    doc["deficits"] = deficit_strings(deficits);
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "T=" << t.num_triangles() << " m=" << deficits.size()
              << " deficits=" << run_length(deficits)
              << " positive=" << (positive ? "yes" : "no") << "\n";
    std::cout << "V=" << t.num_vertices() << " E=" << 3 * t.num_triangles() / 2
              << " euler=" << euler << " degrees=" << run_length(degrees) << "\n";
  }
  return 0;
}

int cmd_analyze(const std::string& file, int seed, bool json, bool dump_form) {
  cs::Triangulation t = cs::load_triangulation(file);
  if (!t.is_combinatorially_positive())
    throw cs::NotCombinatoriallyPositive("a vertex has more than 6 incident triangles");
  cs::ModuliChart chart;
  try {
    chart = cs::moduli_chart(t, seed);
  } catch (const cs::DegenerateModuli& e) {
    // valid surface without a chart; report instead of failing
    if (json) {
      nlohmann::json doc;
      doc["note"] = std::string("degenerate moduli: ") + e.what();
      std::cout << doc.dump(2) << "\n";
    } else {
      std::cout << "note: degenerate moduli: " << e.what() << "\n";
    }
    return 0;
  }
  cs::Matrix h = cs::restrict_form(cs::area_form_ambient(t), chart);
  cs::Signature sig = cs::signature(h);
  cs::BigRat norm = cs::evaluate(h, chart.own_coords);
  bool pass = norm == 3 * t.num_triangles();
  if (json) {
    nlohmann::json doc;
    doc["dim"] = chart.dim;
    doc["signature"] = {sig.positive, sig.negative, sig.zero};
    doc["norm"] = cs::rational_str(norm);
    doc["check"] = pass ? "PASS" : "FAIL";
    doc["triangles"] = t.num_triangles();
    doc["cone_points"] = chart.dim + 2;
    doc["entries_integral"] = cs::entries_integral(h);
    if (dump_form) doc["form"] = form_to_json(h);
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "dim=" << chart.dim << " signature=" << signature_str(sig)
              << " norm=" << cs::rational_str(norm) << " check=" << (pass ? "PASS" : "FAIL")
              << "\n";
    if (dump_form) print_form(std::cout, h);
  }
  return pass ? 0 : 2;
}

int cmd_develop(const std::string& file, int seed, const std::string& svg_path) {
  cs::Triangulation t = cs::load_triangulation(file);
  cs::DevelopedDisk disk = cs::cut_and_develop(t, cs::spanning_tree(t, seed));
  cs::write_text_file(svg_path, cs::render_svg(t, disk));
  std::cout << "T=" << t.num_triangles() << " boundary=" << disk.boundary.size()
            << " svg=" << svg_path << "\n";
  return 0;
}

nlohmann::json conditions_report(const cs::DeficitList& d) {
  nlohmann::json doc;
  doc["deficits"] = deficit_strings(d.deficits);
  doc["special"] = cs::is_special(d);
  nlohmann::json c1 = nlohmann::json::array();
  int violated1 = 0;
  for (const cs::PairReport& r : cs::classify_condition1(d)) {
    const char* cls = r.cls == cs::PairClass::satisfied ? "satisfied"
                      : r.cls == cs::PairClass::violated ? "violated"
                                                         : "covered_by_condition2";
    violated1 += r.cls == cs::PairClass::violated;
    c1.push_back({{"i", r.i},
                  {"j", r.j},
                  {"sum", cs::rational_str(d.deficits[r.i] + d.deficits[r.j])},
                  {"ratio", cs::rational_str(r.ratio)},
                  {"class", cls}});
  }
  nlohmann::json c2 = nlohmann::json::array();
  int violated2 = 0;
  for (const cs::EqualPairReport& r : cs::classify_condition2(d)) {
    violated2 += !r.satisfied;
    c2.push_back({{"i", r.i},
                  {"j", r.j},
                  {"ratio", cs::rational_str(r.ratio)},
                  {"satisfied", r.satisfied}});
  }
  doc["condition1"] = std::move(c1);
  doc["condition2"] = std::move(c2);
  doc["violations"] = {{"condition1", violated1}, {"condition2", violated2}};
  return doc;
}

int cmd_conditions(const std::string& arg) {
  cs::DeficitList d;
  if (arg.find(',') != std::string::npos || !std::filesystem::exists(arg)) {
    std::vector<cs::BigRat> values;
    std::istringstream in(arg);
    std::string item;
    while (std::getline(in, item, ',')) values.push_back(cs::parse_rational(item));
    d = cs::DeficitList::from_values(std::move(values));
  } else {
    d = cs::DeficitList::from_triangulation(cs::load_triangulation(arg));
  }
  std::cout << conditions_report(d).dump(2) << "\n";
  return 0;
}

int cmd_census(int max_t, const std::string& out_dir, bool json) {
  std::vector<cs::Triangulation> surfaces = cs::enumerate_positive(max_t);
  std::filesystem::create_directories(out_dir);

  nlohmann::json index;
  index["max_t"] = max_t;
  index["count"] = int(surfaces.size());
  nlohmann::json entries = nlohmann::json::array();
  int sweep_fail = 0;
  std::map<int, int> per_t_counter;
  for (const cs::Triangulation& t : surfaces) {
    int T = t.num_triangles();
    int k = per_t_counter[T]++;
    char name[32];
    std::snprintf(name, sizeof(name), "t%02d_%03d.json", T, k);
    cs::save_triangulation(t, out_dir + "/" + name);

    int gauss_bonnet = 0;
    for (int deg : t.degrees()) gauss_bonnet += 6 - deg;
    cs::DeficitList d = cs::DeficitList::from_triangulation(t);
    cs::ModuliChart chart = cs::moduli_chart(t, 0);
    cs::Matrix h = cs::restrict_form(cs::area_form_ambient(t), chart);
    cs::Signature sig = cs::signature(h);
    cs::BigRat norm = cs::evaluate(h, chart.own_coords);
    int m = d.size();
    bool ok = gauss_bonnet == 12 && chart.dim == m - 2 &&
              sig == cs::Signature{1, m - 3, 0} && norm == 3 * T &&
              cs::check_condition1(d).empty() && cs::check_condition2(d).empty();
    sweep_fail += !ok;

    nlohmann::json row;
    row["file"] = name;
    row["triangles"] = T;
    row["cone_points"] = m;
    row["deficits"] = deficit_strings(d.deficits);
    row["norm"] = cs::rational_str(norm);
    row["sweep"] = ok ? "pass" : "fail";
    entries.push_back(std::move(row));
  }
  index["entries"] = std::move(entries);
  index["sweep_failures"] = sweep_fail;

  // independent second enumeration strategy must reproduce the same classes
  int cross_t = std::min(max_t, 8);
  std::vector<std::vector<int>> expect;
  for (const cs::Triangulation& t : surfaces)
    if (t.num_triangles() <= cross_t) expect.push_back(t.canonical_code());
  bool cross_ok = expect == cs::enumerate_by_tree_matching(cross_t);
  index["crosscheck"] = {{"max_t", cross_t}, {"agree", cross_ok}};

  cs::write_text_file(out_dir + "/index.json", index.dump(2) + "\n");

  if (json) {
    nlohmann::json doc;
    doc["count"] = int(surfaces.size());
    doc["sweep_failures"] = sweep_fail;
    doc["crosscheck"] = cross_ok;
    doc["dir"] = out_dir;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "surfaces=" << surfaces.size() << " sweep_fail=" << sweep_fail
              << " crosscheck=" << (cross_ok ? "pass" : "fail") << " dir=" << out_dir
              << "\n";
  }
  return (sweep_fail || !cross_ok) ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact development and area-form analysis of equilateral sphere gluings"};
  app.require_subcommand(1);

  std::string file, svg_path, conditions_arg, out_dir;
  int seed = 0;
  int max_t = 8;
  bool json = false, dump_form = false;

  CLI::App* validate = app.add_subcommand("validate", "check a gluing file and report invariants");
  validate->add_option("file", file, "gluing JSON file")->required();
  validate->add_flag("--json", json, "emit JSON");

  CLI::App* analyze = app.add_subcommand("analyze", "develop, build the area form, verify norm");
  analyze->add_option("file", file, "gluing JSON file")->required();
  analyze->add_option("--seed", seed, "spanning-tree root seed");
  analyze->add_flag("--json", json, "emit JSON");
  analyze->add_flag("--dump-form", dump_form, "print the restricted form");

  CLI::App* develop = app.add_subcommand("develop", "cut, develop, and render to SVG");
  develop->add_option("file", file, "gluing JSON file")->required();
  develop->add_option("--seed", seed, "spanning-tree root seed");
  develop->add_option("--svg", svg_path, "output SVG path")->required();

  CLI::App* conditions = app.add_subcommand("conditions", "deficit lattice condition report");
  conditions
      ->add_option("input", conditions_arg,
                   "gluing JSON file or literal deficit list like 1/2,1/2,3/2,3/2")
      ->required();
  conditions->add_flag("--json", json, "emit JSON (the report is JSON either way)");

  CLI::App* census = app.add_subcommand("census", "enumerate all surfaces up to --max-t");
  census->add_option("out_dir", out_dir, "directory for gluing files and index")->required();
  census->add_option("--max-t", max_t, "largest triangle count");
  census->add_flag("--json", json, "emit JSON");

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) return cmd_validate(file, json);
    if (analyze->parsed()) return cmd_analyze(file, seed, json, dump_form);
    if (develop->parsed()) return cmd_develop(file, seed, svg_path);
    if (conditions->parsed()) return cmd_conditions(conditions_arg);
    if (census->parsed()) return cmd_census(max_t, out_dir, json);
  } catch (const cs::InternalInvariant& e) {
    std::cerr << "internal invariant failure: " << e.what() << "\n";
    return 2;
  } catch (const cs::NotAUnit& e) {
    std::cerr << "internal invariant failure: " << e.what() << "\n";
    return 2;
  } catch (const cs::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "unexpected failure: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
