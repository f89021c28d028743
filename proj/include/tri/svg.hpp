#pragma once

#include <string>

#include "tri/hull.hpp"

namespace tri {

// Renders the triangulation to a fixed 800x800 SVG viewport with a 5% margin
// and the y axis flipped: triangle edges in blue, hull edges bold, vertices
// labeled with their index. Output is byte-deterministic.
std::string render_svg(const Triangulation& t, const HullLoop& hull);

}  // namespace tri
