#pragma once

#include <string>

#include "conesphere/triangulation.hpp"

namespace conesphere {

// Canonical JSON form of a gluing: pairs sorted by smaller slot, smaller
// slot first, each side written as [triangle, corner]. Round-trips
// bit-exactly through triangulation_from_json.
std::string to_json(const Triangulation& t);

// Accepts either the canonical {"triangles", "gluing"} form or a
// {"faces": [[v0, v1, v2], ...]} list of CCW vertex triples.
// Throws MalformedGluing on unparseable or inconsistent input.
Triangulation triangulation_from_json(const std::string& text);

Triangulation load_triangulation(const std::string& path);
void save_triangulation(const Triangulation& t, const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace conesphere
