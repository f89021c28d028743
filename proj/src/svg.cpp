#include "tri/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

namespace tri {

namespace {

constexpr double kViewport = 800.0;
constexpr double kMargin = 40.0;  // 5% of the viewport on each side

struct Mapper {
    double minx, miny, scale;

    double mx(Coord x) const { return kMargin + (double(x) - minx) * scale; }
    // y axis flipped so larger y is higher in the figure
    double my(Coord y) const {
        return kViewport - kMargin - (double(y) - miny) * scale;
    }
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string line_tag(const Mapper& m, const Point& a, const Point& b,
                     const char* stroke, const char* width) {
    return "  <line x1=\"" + num(m.mx(a.x)) + "\" y1=\"" + num(m.my(a.y)) +
           "\" x2=\"" + num(m.mx(b.x)) + "\" y2=\"" + num(m.my(b.y)) +
           "\" stroke=\"" + stroke + "\" stroke-width=\"" + width + "\"/>\n";
}

}  // namespace

std::string render_svg(const Triangulation& t, const HullLoop& hull) {
    const PointTable& table = t.table();
    Coord minx = table[0].x, maxx = table[0].x;
    Coord miny = table[0].y, maxy = table[0].y;
    for (const Point& p : table.points()) {
        minx = std::min(minx, p.x);
        maxx = std::max(maxx, p.x);
        miny = std::min(miny, p.y);
        maxy = std::max(maxy, p.y);
    }
    double extent = std::max<double>(
        {double(maxx) - double(minx), double(maxy) - double(miny), 1.0});
    Mapper m{double(minx), double(miny), (kViewport - 2 * kMargin) / extent};

    std::set<Edge> hull_edges;
    for (std::size_t k = 0; k < hull.size(); ++k) {
        hull_edges.insert(Edge(hull.at(static_cast<std::ptrdiff_t>(k)),
                               hull.at(static_cast<std::ptrdiff_t>(k) + 1)));
    }

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" "
           "height=\"800\" viewBox=\"0 0 800 800\">\n";
    svg += "  <rect width=\"800\" height=\"800\" fill=\"white\"/>\n";
    for (const auto& [e, count] : t.edges()) {
        if (hull_edges.count(e)) continue;
        svg += line_tag(m, table[e.a], table[e.b], "#4477cc", "1");
    }
    for (const Edge& e : hull_edges) {
        svg += line_tag(m, table[e.a], table[e.b], "#113366", "3");
    }
    for (PointId p = 0; p < table.size(); ++p) {
        double x = m.mx(table[p].x);
        double y = m.my(table[p].y);
        svg += "  <circle cx=\"" + num(x) + "\" cy=\"" + num(y) +
               "\" r=\"3\" fill=\"#cc3333\"/>\n";
        svg += "  <text x=\"" + num(x + 5) + "\" y=\"" + num(y - 5) +
               "\" font-size=\"12\" fill=\"#333333\">" + std::to_string(p) +
               "</text>\n";
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace tri
