#pragma once

#include <compare>
#include <map>
#include <optional>
#include <vector>

#include "tri/triangle.hpp"

namespace tri {

// An unordered 2-point subset of a triangle, stored with the smaller id
// first.
struct Edge {
    Edge(PointId u, PointId v) : a(u < v ? u : v), b(u < v ? v : u) {
        if (u == v) throw WrongCardinality("edge endpoints must be distinct");
    }
    PointId a;
    PointId b;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// A finite set of oriented triangles over a point table. Values are
// immutable: insertion operations return a new Triangulation. The table is
// held by value, so a Triangulation never dangles.
class Triangulation {
  public:
    explicit Triangulation(PointTable table) : table_(std::move(table)) {}

    // Adopts an externally supplied triangle list verbatim, without invariant
    // checks. Used to replay documents and to build negative controls.
    static Triangulation from_triangles(PointTable table,
                                        std::vector<OrientedTriangle> tris);

    const std::vector<OrientedTriangle>& triangles() const { return tris_; }
    const PointTable& table() const { return table_; }
    std::size_t size() const { return tris_.size(); }

    // Every edge of every triangle with the count of triangles containing it.
    std::map<Edge, int> edges() const;

    // Edges that belong to exactly one triangle.
    std::vector<Edge> boundary_edges() const;

    // A boundary edge is red with respect to d when the opposite vertex of
    // its unique triangle is separated from d. Throws NotBoundary if e is not
    // a boundary edge.
    bool edge_is_red(const Edge& e, const Point& d) const;
    bool edge_is_red(const Edge& e, const RationalPoint& d) const;
    bool edge_is_red(const Edge& e, PointId d) const {
        return edge_is_red(e, table_[d]);
    }

    // The unique triangle strictly containing d, if any. Linear scan. Throws
    // MultipleContainers when more than one triangle contains d (a broken
    // no-overlap invariant) and DegenerateInput when d sits on a triangle
    // boundary.
    std::optional<OrientedTriangle> find_containing(const Point& d) const;
    std::optional<OrientedTriangle> find_containing(PointId d) const {
        return find_containing(table_[d]);
    }

    // Splits t into the three triangles joining d to t's edges.
    Triangulation insert_inside(const OrientedTriangle& t, PointId d) const;

    // Fans d to every red boundary edge. Throws NoRedEdge if none exists,
    // which is impossible for an exterior point over a valid triangulation.
    Triangulation insert_outside(PointId d) const;

    std::array<Point, 3> coords(const OrientedTriangle& t) const {
        return {table_[t.vertex(0)], table_[t.vertex(1)], table_[t.vertex(2)]};
    }

    friend bool operator==(const Triangulation& lhs, const Triangulation& rhs) {
        return lhs.tris_ == rhs.tris_;
    }

  private:
    Triangulation with(std::vector<OrientedTriangle> tris) const;

    PointTable table_;
    std::vector<OrientedTriangle> tris_;  // sorted unique when built validly
};

// The naive incremental algorithm: seed with the first three points, then
// insert the rest in input order, splitting the containing triangle or
// fanning to the red boundary edges. Validates the table first.
Triangulation triangulate(const PointTable& table);

}  // namespace tri
