#include <doctest.h>

#include "tri/generate.hpp"
#include "tri/io.hpp"
#include "tri/svg.hpp"
#include "tri/verifier.hpp"

using namespace tri;

TEST_CASE("point file parsing skips comments and blank lines") {
    PointTable table = parse_point_file("# corner cases\n\n0 0\n  4   0\n0 4\n");
    REQUIRE(table.size() == 3);
    CHECK(table[0] == Point(0, 0));
    CHECK(table[1] == Point(4, 0));
    CHECK(table[2] == Point(0, 4));
}

TEST_CASE("point file parse errors carry line numbers") {
    CHECK_THROWS_AS(parse_point_file("0 0\n1 zebra\n"), ParseError);
    CHECK_THROWS_AS(parse_point_file("0\n"), ParseError);
    CHECK_THROWS_AS(parse_point_file("0 0 0\n"), ParseError);
    CHECK_THROWS_AS(parse_point_file("1073741825 0\n"), ParseError);
    try {
        parse_point_file("0 0\n1 1\nbroken\n");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
}

TEST_CASE("point file round trip") {
    PointTable table = generate_points(25, 3, 1000000);
    PointTable again = parse_point_file(render_point_file(table, "test"));
    CHECK(table == again);
}

TEST_CASE("document round trip is exact") {
    for (std::uint64_t seed : {0u, 8u, 15u}) {
        PointTable table = generate_points(30, seed, 100000);
        TriangulationDocument doc = make_document(triangulate(table));
        std::string text = render_document(doc);
        CHECK(parse_document(text, /*strict=*/true) == doc);
        CHECK(render_document(parse_document(text, true)) == text);
    }
}

TEST_CASE("strict document parsing enforces canonical form") {
    PointTable sq({Point(0, 0), Point(4, 0), Point(4, 4), Point(0, 4)});
    TriangulationDocument doc = make_document(triangulate(sq));
    std::string good = render_document(doc);
    CHECK_NOTHROW(parse_document(good, true));

    std::swap(doc.triangles[0], doc.triangles[1]);
    CHECK_THROWS_AS(parse_document(render_document(doc), true), ParseError);
    // Lenient mode accepts it, for replaying corrupted documents.
    CHECK_NOTHROW(parse_document(render_document(doc), false));

    std::swap(doc.triangles[0], doc.triangles[1]);
    std::swap(doc.triangles[0][1], doc.triangles[0][2]);  // now clockwise
    CHECK_THROWS_AS(parse_document(render_document(doc), true), ParseError);

    CHECK_THROWS_AS(parse_document("points 1\n0 0\ntriangles 1\n0 0 7\nhull 0\n\n",
                                   false),
                    ParseError);  // index out of range even leniently
}

TEST_CASE("svg rendering is deterministic and well formed") {
    PointTable table = generate_points(20, 4, 100000);
    Triangulation t = triangulate(table);
    HullLoop hull = build_hull_loop(t);
    std::string svg = render_svg(t, hull);
    CHECK(svg == render_svg(t, hull));
    CHECK(svg.find("<svg") == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    // Every vertex is labeled.
    for (PointId p = 0; p < table.size(); ++p) {
        CHECK(svg.find(">" + std::to_string(p) + "</text>") !=
              std::string::npos);
    }
}

TEST_CASE("generate_points honors its contract") {
    PointTable small = generate_points(3, 0, 100);
    small.validate();

    PointTable table = generate_points(50, 7, 1000000);
    table.validate();
    CHECK(verify_all(table, 200, 7).overall());

    // Identical parameters give identical tables.
    CHECK(generate_points(40, 9, 1000) == generate_points(40, 9, 1000));

    CHECK_THROWS_AS(generate_points(2, 0, 100), InputError);
    // 10 points with no collinear triple exist on a 5x5 grid, but 11 cannot.
    CHECK_NOTHROW(generate_points(10, 0, 2));
    CHECK_THROWS_AS(generate_points(11, 0, 2), GenerationExhausted);
    // Density heuristic rejects outright impossible requests.
    CHECK_THROWS_AS(generate_points(100, 0, 3), GenerationExhausted);
}
