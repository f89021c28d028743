#pragma once

#include <array>
#include <compare>
#include <span>
#include <utility>

#include "tri/table.hpp"

namespace tri {

// The integers modulo 3, with group structure. Indexing triangle vertices
// with Idx3 makes (t_i, t_{i+1}, t_{i-1}) meaningful for every i without
// out-of-range cases.
class Idx3 {
  public:
    constexpr Idx3(int v = 0) : v_(((v % 3) + 3) % 3) {}

    constexpr int value() const { return v_; }

    friend constexpr Idx3 operator+(Idx3 a, Idx3 b) { return Idx3(a.v_ + b.v_); }
    friend constexpr Idx3 operator-(Idx3 a, Idx3 b) { return Idx3(a.v_ - b.v_); }
    constexpr Idx3 operator-() const { return Idx3(-v_); }
    friend constexpr bool operator==(Idx3, Idx3) = default;

  private:
    int v_;
};

// A triangle as three pairwise-distinct point ids whose coordinate triple
// (t_0, t_1, t_2) is counterclockwise, stored rotated so the smallest id is
// first. Two OrientedTriangles over the same 3-set compare equal.
class OrientedTriangle {
  public:
    PointId vertex(Idx3 i) const { return ids_[i.value()]; }

    // The edge {t_{i+1}, t_{i-1}} opposite vertex t_i, as an ordered pair.
    std::pair<PointId, PointId> edge_opposite(Idx3 i) const {
        return {vertex(i + 1), vertex(i - 1)};
    }

    const std::array<PointId, 3>& ids() const { return ids_; }

    bool has_vertex(PointId p) const {
        return ids_[0] == p || ids_[1] == p || ids_[2] == p;
    }

    // Escape hatch for replaying externally supplied triangle lists (and for
    // negative-control tests); performs no validation at all.
    static OrientedTriangle unchecked(PointId a, PointId b, PointId c) {
        return OrientedTriangle({a, b, c});
    }

    friend auto operator<=>(const OrientedTriangle&,
                            const OrientedTriangle&) = default;

  private:
    explicit OrientedTriangle(std::array<PointId, 3> ids) : ids_(ids) {}
    friend OrientedTriangle three_points(std::span<const PointId> s,
                                         const PointTable& table);

    std::array<PointId, 3> ids_;
};

// Orients a 3-element point-id set counterclockwise and canonicalizes the
// starting vertex. Throws WrongCardinality unless s holds exactly three
// distinct ids, DegenerateInput when the points are collinear.
OrientedTriangle three_points(std::span<const PointId> s,
                              const PointTable& table);

inline OrientedTriangle three_points(const std::array<PointId, 3>& s,
                                     const PointTable& table) {
    return three_points(std::span<const PointId>(s), table);
}

}  // namespace tri
