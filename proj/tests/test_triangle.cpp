#include <doctest.h>

#include <algorithm>
#include <set>

#include "tri/generate.hpp"
#include "tri/rng.hpp"
#include "tri/triangle.hpp"

using namespace tri;

namespace {

PointTable demo_table() {
    return PointTable({Point(0, 0), Point(4, 0), Point(0, 4), Point(1, 1)});
}

}  // namespace

TEST_CASE("Idx3 group structure") {
    CHECK(Idx3(0) + Idx3(3) == Idx3(0));
    CHECK(Idx3(0) - Idx3(1) == Idx3(2));
    CHECK(-Idx3(1) == Idx3(2));
    CHECK(Idx3(2) + Idx3(2) == Idx3(1));
    CHECK(Idx3(-4) == Idx3(2));
}

TEST_CASE("three_points orients and canonicalizes") {
    PointTable table = demo_table();
    OrientedTriangle t = three_points(std::array<PointId, 3>{2, 0, 1}, table);
    // CCW at every starting index.
    for (Idx3 i : {Idx3(0), Idx3(1), Idx3(2)}) {
        CHECK(orient(table[t.vertex(i)], table[t.vertex(i + 1)],
                     table[t.vertex(i - 1)]) == Orientation::CounterClockwise);
    }
    // Smallest id first.
    CHECK(t.vertex(0) == 0);
    // Vertex set preserved.
    std::set<PointId> ids = {t.vertex(0), t.vertex(1), t.vertex(2)};
    CHECK(ids == std::set<PointId>{0, 1, 2});
}

TEST_CASE("three_points rejects bad inputs") {
    PointTable collinear({Point(0, 0), Point(1, 1), Point(2, 2)});
    CHECK_THROWS_AS(three_points(std::array<PointId, 3>{0, 1, 2}, collinear),
                    DegenerateInput);
    PointTable table = demo_table();
    std::vector<PointId> two = {0, 1};
    CHECK_THROWS_AS(three_points(std::span<const PointId>(two), table),
                    WrongCardinality);
    CHECK_THROWS_AS(three_points(std::array<PointId, 3>{0, 1, 1}, table),
                    WrongCardinality);
}

TEST_CASE("vertex indexing wraps modulo 3") {
    PointTable table = demo_table();
    OrientedTriangle t = three_points(std::array<PointId, 3>{0, 1, 2}, table);
    CHECK(t.vertex(Idx3(0) + Idx3(3)) == t.vertex(0));
    CHECK(t.vertex(Idx3(0) - Idx3(1)) == t.vertex(2));
    std::set<PointId> distinct = {t.vertex(0), t.vertex(1), t.vertex(-1)};
    CHECK(distinct.size() == 3);
}

TEST_CASE("edge_opposite excludes the pivot vertex") {
    PointTable table = demo_table();
    OrientedTriangle t = three_points(std::array<PointId, 3>{0, 1, 2}, table);
    std::set<std::set<PointId>> edges;
    for (Idx3 i : {Idx3(0), Idx3(1), Idx3(2)}) {
        auto [u, v] = t.edge_opposite(i);
        CHECK(u != t.vertex(i));
        CHECK(v != t.vertex(i));
        edges.insert({u, v});
        // (t_{i+1}, t_{i-1}, t_i) is a cyclic rotation of the CCW triple.
        CHECK(orient(table[u], table[v], table[t.vertex(i)]) ==
              Orientation::CounterClockwise);
    }
    CHECK(edges.size() == 3);
}

TEST_CASE("canonical form is stable and unique per 3-set") {
    Rng rng(99);
    for (int i = 0; i < 200; ++i) {
        PointTable table = generate_points(6, 1000 + i, 1000);
        std::array<PointId, 3> ids = {
            static_cast<PointId>(rng.below(6)), 0, 0};
        do {
            ids[1] = static_cast<PointId>(rng.below(6));
        } while (ids[1] == ids[0]);
        do {
            ids[2] = static_cast<PointId>(rng.below(6));
        } while (ids[2] == ids[0] || ids[2] == ids[1]);

        OrientedTriangle t = three_points(ids, table);
        // Any permutation of the same set gives the identical value.
        std::array<PointId, 3> perm = ids;
        std::sort(perm.begin(), perm.end());
        do {
            CHECK(three_points(perm, table) == t);
        } while (std::next_permutation(perm.begin(), perm.end()));
        // Re-canonicalizing is the identity.
        CHECK(three_points(t.ids(), table) == t);
    }
}
