#include "tri/triangulation.hpp"

#include <algorithm>

namespace tri {

namespace {

// Finds the vertex opposite edge e in its unique containing triangle.
PointId opposite_vertex(const std::vector<OrientedTriangle>& tris,
                        const Edge& e) {
    const OrientedTriangle* owner = nullptr;
    int count = 0;
    for (const OrientedTriangle& t : tris) {
        if (t.has_vertex(e.a) && t.has_vertex(e.b)) {
            ++count;
            owner = &t;
        }
    }
    if (count != 1) {
        throw NotBoundary("edge {" + std::to_string(e.a) + "," +
                          std::to_string(e.b) + "} belongs to " +
                          std::to_string(count) + " triangles");
    }
    for (Idx3 i : {Idx3(0), Idx3(1), Idx3(2)}) {
        PointId v = owner->vertex(i);
        if (v != e.a && v != e.b) return v;
    }
    throw NotBoundary("degenerate triangle owns the edge");
}

}  // namespace

Triangulation Triangulation::from_triangles(PointTable table,
                                            std::vector<OrientedTriangle> tris) {
    Triangulation result(std::move(table));
    result.tris_ = std::move(tris);
    return result;
}

Triangulation Triangulation::with(std::vector<OrientedTriangle> tris) const {
    std::sort(tris.begin(), tris.end());
    tris.erase(std::unique(tris.begin(), tris.end()), tris.end());
    Triangulation result(table_);
    result.tris_ = std::move(tris);
    return result;
}

std::map<Edge, int> Triangulation::edges() const {
    std::map<Edge, int> counts;
    for (const OrientedTriangle& t : tris_) {
        for (Idx3 i : {Idx3(0), Idx3(1), Idx3(2)}) {
            auto [u, v] = t.edge_opposite(i);
            if (u == v) continue;  // tolerated in replayed raw lists
            ++counts[Edge(u, v)];
        }
    }
    return counts;
}

std::vector<Edge> Triangulation::boundary_edges() const {
    std::vector<Edge> result;
    for (const auto& [e, count] : edges()) {
        if (count == 1) result.push_back(e);
    }
    return result;
}

bool Triangulation::edge_is_red(const Edge& e, const Point& d) const {
    PointId c = opposite_vertex(tris_, e);
    return separated(table_[e.a], table_[e.b], table_[c], d);
}

bool Triangulation::edge_is_red(const Edge& e, const RationalPoint& d) const {
    PointId c = opposite_vertex(tris_, e);
    return separated(table_[e.a], table_[e.b], table_[c], d);
}

std::optional<OrientedTriangle> Triangulation::find_containing(
    const Point& d) const {
    std::optional<OrientedTriangle> found;
    for (const OrientedTriangle& t : tris_) {
        bool inside = true;
        bool on_line = false;
        for (Idx3 i : {Idx3(0), Idx3(1), Idx3(2)}) {
            Orientation o = orient(table_[t.vertex(i)],
                                   table_[t.vertex(i + 1)], d);
            if (o == Orientation::Clockwise) {
                inside = false;
                break;
            }
            if (o == Orientation::Collinear) on_line = true;
        }
        if (!inside) continue;
        if (on_line) {
            throw DegenerateInput("query point lies on a triangle boundary");
        }
        if (found) {
            throw MultipleContainers(
                "point contained in two triangles: no-overlap invariant broken");
        }
        found = t;
    }
    return found;
}

Triangulation Triangulation::insert_inside(const OrientedTriangle& t,
                                           PointId d) const {
    if (!inside_triangle(coords(t), table_[d])) {
        throw PreconditionViolated("insert_inside: point not inside triangle");
    }
    std::vector<OrientedTriangle> next;
    next.reserve(tris_.size() + 2);
    for (const OrientedTriangle& u : tris_) {
        if (!(u == t)) next.push_back(u);
    }
    for (Idx3 i : {Idx3(0), Idx3(1), Idx3(2)}) {
        next.push_back(three_points(
            std::array<PointId, 3>{t.vertex(i), t.vertex(i + 1), d}, table_));
    }
    return with(std::move(next));
}

Triangulation Triangulation::insert_outside(PointId d) const {
    std::vector<OrientedTriangle> next = tris_;
    bool any = false;
    for (const Edge& e : boundary_edges()) {
        if (!edge_is_red(e, d)) continue;
        next.push_back(
            three_points(std::array<PointId, 3>{e.a, e.b, d}, table_));
        any = true;
    }
    if (!any) {
        throw NoRedEdge(
            "no red boundary edge for an exterior point: geometric invariant "
            "broken");
    }
    return with(std::move(next));
}

Triangulation triangulate(const PointTable& table) {
    table.validate();
    Triangulation t(table);
    t = Triangulation::from_triangles(
        table, {three_points(std::array<PointId, 3>{0, 1, 2}, table)});
    for (PointId d = 3; d < table.size(); ++d) {
        if (auto container = t.find_containing(d)) {
            t = t.insert_inside(*container, d);
        } else {
            t = t.insert_outside(d);
        }
    }
    return t;
}

}  // namespace tri
