#include <doctest.h>

#include <algorithm>
#include <set>

#include "tri/generate.hpp"
#include "tri/hull.hpp"
#include "tri/verifier.hpp"

using namespace tri;

namespace {

PointTable square() {
    return PointTable({Point(0, 0), Point(4, 0), Point(4, 4), Point(0, 4)});
}

PointTable right_triangle() {
    return PointTable({Point(0, 0), Point(4, 0), Point(0, 4)});
}

}  // namespace

TEST_CASE("build_hull_loop on small triangulations") {
    Triangulation t = triangulate(right_triangle());
    HullLoop loop = build_hull_loop(t);
    CHECK(loop.order() == std::vector<PointId>{0, 1, 2});

    Triangulation ts = triangulate(square());
    HullLoop sq_loop = build_hull_loop(ts);
    CHECK(sq_loop.order() == std::vector<PointId>{0, 1, 2, 3});

    PointTable with_interior(
        {Point(0, 0), Point(4, 0), Point(0, 4), Point(1, 1)});
    HullLoop inner = build_hull_loop(triangulate(with_interior));
    CHECK(inner.order() == std::vector<PointId>{0, 1, 2});
    CHECK_FALSE(inner.contains(3));
}

TEST_CASE("build_hull_loop rejects a broken boundary") {
    PointTable table({Point(0, 0), Point(4, 0), Point(0, 4), Point(1, 1),
                      Point(9, 9), Point(13, 9), Point(9, 13)});
    // Two disconnected triangles: two boundary cycles.
    Triangulation broken = Triangulation::from_triangles(
        table, {three_points(std::array<PointId, 3>{0, 1, 2}, table),
                three_points(std::array<PointId, 3>{4, 5, 6}, table)});
    CHECK_THROWS_AS(build_hull_loop(broken), MalformedBoundary);
}

TEST_CASE("hull orbit law") {
    PointTable table = generate_points(40, 5, 100000);
    HullLoop loop = build_hull_loop(triangulate(table));
    const std::size_t n = loop.size();
    for (PointId x : loop.order()) {
        PointId cur = x;
        for (std::size_t k = 1; k < n; ++k) {
            cur = loop.successor(cur);
            CHECK(cur != x);  // fewer than n steps never return
        }
        CHECK(loop.successor(cur) == x);  // exactly n steps do
    }
}

TEST_CASE("classify_hull_edges on the documented examples") {
    Triangulation t = triangulate(right_triangle());
    HullLoop loop = build_hull_loop(t);
    auto colors = classify_hull_edges(loop, t, Point(5, 5));
    CHECK(std::count(colors.begin(), colors.end(), EdgeColor::Red) == 1);
    CHECK(std::count(colors.begin(), colors.end(), EdgeColor::Blue) == 2);

    Triangulation ts = triangulate(square());
    HullLoop sq_loop = build_hull_loop(ts);
    auto c1 = classify_hull_edges(sq_loop, ts, Point(8, 8));
    CHECK(std::count(c1.begin(), c1.end(), EdgeColor::Red) == 2);
    auto c2 = classify_hull_edges(sq_loop, ts, Point(2, -3));
    CHECK(std::count(c2.begin(), c2.end(), EdgeColor::Red) == 1);

    CHECK_THROWS_AS(classify_hull_edges(loop, t, Point(1, 1)), InsidePoint);
}

TEST_CASE("purple_points on the documented examples") {
    Triangulation t = triangulate(right_triangle());
    HullLoop loop = build_hull_loop(t);
    PurpleReport r = purple_points(loop, t, Point(5, 5));
    CHECK(r.p1 == 1);
    CHECK(r.p2 == 2);
    CHECK(r.run_length == 1);

    Triangulation ts = triangulate(square());
    HullLoop sq_loop = build_hull_loop(ts);
    PurpleReport r1 = purple_points(sq_loop, ts, Point(8, 8));
    CHECK(r1.p1 == 1);
    CHECK(r1.p2 == 3);
    CHECK(r1.run_length == 2);
    PurpleReport r2 = purple_points(sq_loop, ts, Point(2, -3));
    CHECK(r2.p1 == 0);
    CHECK(r2.p2 == 1);
    CHECK(r2.run_length == 1);

    CHECK_THROWS_AS(purple_points(loop, t, Point(1, 1)), InsidePoint);
}

TEST_CASE("hull_oracle wraps independent of triangulation") {
    PointTable sq_plus({Point(0, 0), Point(4, 0), Point(4, 4), Point(0, 4),
                        Point(2, 1)});
    HullLoop loop = hull_oracle(sq_plus);
    CHECK(loop.order() == std::vector<PointId>{0, 1, 2, 3});

    CHECK(hull_oracle(right_triangle()).order() ==
          std::vector<PointId>{0, 1, 2});

    PointTable pentagon({Point(0, 0), Point(10, -3), Point(16, 6),
                         Point(8, 14), Point(-3, 7)});
    CHECK(hull_oracle(pentagon).size() == 5);
}

TEST_CASE("triangulation boundary equals the gift-wrapped hull") {
    for (std::uint64_t seed : {11u, 12u, 13u, 14u}) {
        PointTable table = generate_points(50, seed, 100000);
        Triangulation t = triangulate(table);
        CHECK(build_hull_loop(t).rotation_equal(hull_oracle(table)));
    }
}

TEST_CASE("insert_outside rewrites the boundary as blue arc plus two edges") {
    PointTable table = generate_points(30, 21, 100000);
    Triangulation t = triangulate(table);
    HullLoop loop = build_hull_loop(t);

    for (const Point& d : make_external_queries(table, 5, 77)) {
        auto colors = classify_hull_edges(loop, t, d);
        PurpleReport purple = purple_points(loop, t, d);

        std::vector<Point> pts = table.points();
        pts.push_back(d);
        PointTable ext(std::move(pts));
        PointId d_id = static_cast<PointId>(ext.size() - 1);
        Triangulation over_ext = Triangulation::from_triangles(
            ext, std::vector<OrientedTriangle>(t.triangles()));
        Triangulation after = over_ext.insert_outside(d_id);

        std::set<Edge> expected;
        for (std::size_t k = 0; k < loop.size(); ++k) {
            if (colors[k] == EdgeColor::Blue) {
                expected.insert(Edge(loop.at(static_cast<std::ptrdiff_t>(k)),
                                     loop.at(static_cast<std::ptrdiff_t>(k) + 1)));
            }
        }
        expected.insert(Edge(purple.p1, d_id));
        expected.insert(Edge(d_id, purple.p2));

        auto boundary = after.boundary_edges();
        CHECK(std::set<Edge>(boundary.begin(), boundary.end()) == expected);
        CHECK(build_hull_loop(after).contains(d_id));
    }
}
