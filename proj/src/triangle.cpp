#include "tri/triangle.hpp"

#include <algorithm>

namespace tri {

OrientedTriangle three_points(std::span<const PointId> s,
                              const PointTable& table) {
    if (s.size() != 3) {
        throw WrongCardinality("three_points needs a 3-element set, got " +
                               std::to_string(s.size()));
    }
    std::array<PointId, 3> v = {s[0], s[1], s[2]};
    if (v[0] == v[1] || v[1] == v[2] || v[0] == v[2]) {
        throw WrongCardinality("three_points needs pairwise-distinct ids");
    }
    Orientation o = orient(table[v[0]], table[v[1]], table[v[2]]);
    if (o == Orientation::Collinear) {
        throw DegenerateInput("three_points: collinear point set");
    }
    if (o == Orientation::Clockwise) std::swap(v[1], v[2]);
    // Orientation-preserving rotation putting the smallest id first.
    auto smallest = std::min_element(v.begin(), v.end());
    std::rotate(v.begin(), smallest, v.end());
    return OrientedTriangle(v);
}

}  // namespace tri
