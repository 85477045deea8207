#pragma once

#include <string>

#include "conesphere/developing.hpp"
#include "conesphere/triangulation.hpp"

namespace conesphere {

// Deterministic SVG picture of a developed disk: unit triangles on the
// triangular lattice, the two sides of each cut pair stroked in a shared
// color, and every cone vertex marked with its deficit in units of pi/3.
std::string render_svg(const Triangulation& t, const DevelopedDisk& disk);

}  // namespace conesphere
