#pragma once

#include <cstdint>
#include <vector>

#include "tri/predicates.hpp"

namespace tri {

// Index into a PointTable.
using PointId = std::uint32_t;

// The input point set, indexed densely by PointId in load order.
class PointTable {
  public:
    PointTable() = default;
    explicit PointTable(std::vector<Point> points)
        : points_(std::move(points)) {}

    // General-position validation: at least 3 points, pairwise distinct, no
    // three collinear. Throws TooFewPoints, DuplicatePoint or CollinearTriple
    // naming the offending indices.
    void validate() const;

    std::size_t size() const { return points_.size(); }
    const Point& operator[](PointId id) const { return points_[id]; }
    const std::vector<Point>& points() const { return points_; }

    // The table restricted to its first k points, ids preserved.
    PointTable prefix(std::size_t k) const {
        return PointTable(std::vector<Point>(points_.begin(),
                                             points_.begin() + k));
    }

    friend bool operator==(const PointTable&, const PointTable&) = default;

  private:
    std::vector<Point> points_;
};

}  // namespace tri
