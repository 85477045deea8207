#include "conesphere/json_io.hpp"

#include <fstream>
#include <sstream>

#include "conesphere/errors.hpp"
#include "json.hpp"

namespace conesphere {

std::string to_json(const Triangulation& t) {
  nlohmann::json pairs = nlohmann::json::array();
  for (int a = 0; a < t.num_slots(); ++a) {
    int b = t.partner(a);
    if (a > b) continue;
    pairs.push_back({{a / 3, a % 3}, {b / 3, b % 3}});
  }
  nlohmann::json doc;
  doc["triangles"] = t.num_triangles();
  doc["gluing"] = std::move(pairs);
  return doc.dump(2) + "\n";
}

Triangulation triangulation_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw MalformedGluing(std::string("JSON parse error: ") + e.what());
  }
  try {
    if (doc.contains("faces")) {
      std::vector<std::vector<int>> faces = doc.at("faces");
      return Triangulation::from_faces(faces);
    }
    int triangles = doc.at("triangles");
    if (triangles <= 0) throw MalformedGluing("triangle count must be positive");
    std::vector<int> glue(size_t(triangles) * 3, -1);
    for (const auto& pair : doc.at("gluing")) {
      if (!pair.is_array() || pair.size() != 2)
        throw MalformedGluing("gluing entries must be slot pairs");
      int slot[2];
      for (int side = 0; side < 2; ++side) {
        int tri = pair.at(side).at(0);
        int corner = pair.at(side).at(1);
        if (tri < 0 || tri >= triangles || corner < 0 || corner > 2)
          throw MalformedGluing("slot out of range");
        slot[side] = 3 * tri + corner;
      }
      if (glue[slot[0]] >= 0 || glue[slot[1]] >= 0)
        throw MalformedGluing("slot glued twice");
      glue[slot[0]] = slot[1];
      glue[slot[1]] = slot[0];
    }
    for (int s = 0; s < int(glue.size()); ++s)
      if (glue[s] < 0) throw MalformedGluing("slot left unglued");
    return Triangulation::from_gluing(std::move(glue));
  } catch (const nlohmann::json::exception& e) {
    throw MalformedGluing(std::string("unexpected JSON shape: ") + e.what());
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << content;
  if (!out) throw Error("write failed for " + path);
}

Triangulation load_triangulation(const std::string& path) {
  return triangulation_from_json(read_text_file(path));
}

void save_triangulation(const Triangulation& t, const std::string& path) {
  write_text_file(path, to_json(t));
}

}  // namespace conesphere
