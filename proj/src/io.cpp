#include "tri/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "tri/hull.hpp"

namespace tri {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> fields;
    std::istringstream in(line);
    std::string field;
    while (in >> field) fields.push_back(field);
    return fields;
}

std::int64_t parse_int(const std::string& field, std::size_t line_no) {
    std::int64_t value = 0;
    auto [ptr, ec] =
        std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size()) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": expected an integer, got '" + field + "'");
    }
    return value;
}

Point parse_point_fields(const std::vector<std::string>& fields,
                         std::size_t line_no) {
    if (fields.size() != 2) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": expected 'x y'");
    }
    try {
        return Point(parse_int(fields[0], line_no), parse_int(fields[1], line_no));
    } catch (const CoordinateOutOfRange&) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": coordinate exceeds the 2^30 bound");
    }
}

}  // namespace

PointTable parse_point_file(const std::string& text) {
    std::vector<Point> points;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> fields = split_ws(line);
        if (fields.empty()) continue;
        points.push_back(parse_point_fields(fields, line_no));
    }
    return PointTable(std::move(points));
}

std::string render_point_file(const PointTable& table,
                              const std::string& header_comment) {
    std::string out;
    if (!header_comment.empty()) out += "# " + header_comment + "\n";
    for (const Point& p : table.points()) {
        out += std::to_string(p.x) + " " + std::to_string(p.y) + "\n";
    }
    return out;
}

TriangulationDocument make_document(const Triangulation& t) {
    TriangulationDocument doc;
    doc.points = t.table().points();
    for (const OrientedTriangle& tr : t.triangles()) {
        doc.triangles.push_back(tr.ids());
    }
    std::sort(doc.triangles.begin(), doc.triangles.end());
    doc.hull = build_hull_loop(t).order();
    return doc;
}

std::string render_document(const TriangulationDocument& doc) {
    std::string out;
    out += "points " + std::to_string(doc.points.size()) + "\n";
    for (const Point& p : doc.points) {
        out += std::to_string(p.x) + " " + std::to_string(p.y) + "\n";
    }
    out += "triangles " + std::to_string(doc.triangles.size()) + "\n";
    for (const auto& tr : doc.triangles) {
        out += std::to_string(tr[0]) + " " + std::to_string(tr[1]) + " " +
               std::to_string(tr[2]) + "\n";
    }
    out += "hull " + std::to_string(doc.hull.size()) + "\n";
    std::string sep;
    for (PointId id : doc.hull) {
        out += sep + std::to_string(id);
        sep = " ";
    }
    out += "\n";
    return out;
}

TriangulationDocument parse_document(const std::string& text, bool strict) {
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    auto next_line = [&]() {
        if (!std::getline(in, line)) {
            throw ParseError("unexpected end of document");
        }
        ++line_no;
    };
    auto expect_section = [&](const std::string& keyword) {
        next_line();
        std::vector<std::string> fields = split_ws(line);
        if (fields.size() != 2 || fields[0] != keyword) {
            throw ParseError("line " + std::to_string(line_no) +
                             ": expected '" + keyword + " <count>'");
        }
        std::int64_t count = parse_int(fields[1], line_no);
        if (count < 0) {
            throw ParseError("line " + std::to_string(line_no) +
                             ": negative count");
        }
        return static_cast<std::size_t>(count);
    };

    TriangulationDocument doc;
    std::size_t n_points = expect_section("points");
    for (std::size_t i = 0; i < n_points; ++i) {
        next_line();
        doc.points.push_back(parse_point_fields(split_ws(line), line_no));
    }
    std::size_t n_tris = expect_section("triangles");
    for (std::size_t i = 0; i < n_tris; ++i) {
        next_line();
        std::vector<std::string> fields = split_ws(line);
        if (fields.size() != 3) {
            throw ParseError("line " + std::to_string(line_no) +
                             ": expected 'i j k'");
        }
        std::array<PointId, 3> tr;
        for (int f = 0; f < 3; ++f) {
            std::int64_t v = parse_int(fields[f], line_no);
            if (v < 0 || static_cast<std::size_t>(v) >= n_points) {
                throw ParseError("line " + std::to_string(line_no) +
                                 ": triangle index out of range");
            }
            tr[f] = static_cast<PointId>(v);
        }
        doc.triangles.push_back(tr);
    }
    std::size_t n_hull = expect_section("hull");
    next_line();
    std::vector<std::string> fields = split_ws(line);
    if (fields.size() != n_hull) {
        throw ParseError("line " + std::to_string(line_no) + ": expected " +
                         std::to_string(n_hull) + " hull indices");
    }
    for (const std::string& f : fields) {
        std::int64_t v = parse_int(f, line_no);
        if (v < 0 || static_cast<std::size_t>(v) >= n_points) {
            throw ParseError("line " + std::to_string(line_no) +
                             ": hull index out of range");
        }
        doc.hull.push_back(static_cast<PointId>(v));
    }

    if (strict) {
        PointTable table{std::vector<Point>(doc.points)};
        for (const auto& tr : doc.triangles) {
            if (tr[0] >= tr[1] || tr[0] >= tr[2]) {
                throw ParseError("triangle not rotated to smallest index first");
            }
            if (orient(table[tr[0]], table[tr[1]], table[tr[2]]) !=
                Orientation::CounterClockwise) {
                throw ParseError("triangle not counterclockwise");
            }
        }
        if (!std::is_sorted(doc.triangles.begin(), doc.triangles.end())) {
            throw ParseError("triangle list not sorted");
        }
        if (!doc.hull.empty() &&
            *std::min_element(doc.hull.begin(), doc.hull.end()) !=
                doc.hull.front()) {
            throw ParseError("hull loop not rotated to smallest index first");
        }
    }
    return doc;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "' for reading");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw ParseError("failed writing '" + path + "'");
}

}  // namespace tri
