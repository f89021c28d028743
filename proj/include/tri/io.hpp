#pragma once

#include <string>
#include <vector>

#include "tri/triangulation.hpp"

namespace tri {

// Point files: one "x y" pair of signed decimal integers per line, '#'
// comment lines and blank lines ignored. PointId is the zero-based order
// among data lines.
PointTable parse_point_file(const std::string& text);
std::string render_point_file(const PointTable& table,
                              const std::string& header_comment = "");

// The canonical triangulation output: point list, lexicographically sorted
// triangle index triples (each CCW, smallest index first) and the CCW hull
// loop starting at its smallest index. Rendering is byte-deterministic and
// parse(render(d)) == d.
struct TriangulationDocument {
    std::vector<Point> points;
    std::vector<std::array<PointId, 3>> triangles;
    std::vector<PointId> hull;

    friend bool operator==(const TriangulationDocument&,
                           const TriangulationDocument&) = default;
};

TriangulationDocument make_document(const Triangulation& t);

std::string render_document(const TriangulationDocument& doc);

// strict = true additionally enforces the canonical-form invariants (CCW
// smallest-first triples, sorted list, hull rotated to its smallest index).
// Lenient parsing only requires indices to be in range, so corrupted
// documents can be replayed through the verifier.
TriangulationDocument parse_document(const std::string& text, bool strict);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace tri
