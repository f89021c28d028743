#pragma once

#include <cstddef>
#include <unordered_map>
#include <vector>

#include "tri/triangulation.hpp"

namespace tri {

enum class EdgeColor { Red, Blue };

// The two hull vertices where the edge colors change, plus the length of the
// contiguous red arc between them: [p1, f(p1)] starts the red run and
// f^{run_length}(p1) = p2 ends it.
struct PurpleReport {
    PointId p1;
    PointId p2;
    std::size_t run_length;  // n_r, the number of red edges
};

// The convex-hull boundary as the successor function f on hull vertices:
// [x, f(x)] is always a boundary edge with every other point on its left.
// Stored as a cyclic CCW sequence, canonically rotated to start at the
// smallest id.
class HullLoop {
  public:
    // Adopts a CCW cycle of length >= 3; rotates it to canonical form.
    static HullLoop from_cycle(std::vector<PointId> ccw);

    std::size_t size() const { return order_.size(); }
    const std::vector<PointId>& order() const { return order_; }

    // Vertex at cyclic position k (wraps modulo n, negatives allowed).
    PointId at(std::ptrdiff_t k) const;

    PointId successor(PointId x) const;
    bool contains(PointId x) const { return pos_.count(x) != 0; }

    // Equality as cyclic sequences (up to rotation, not reflection). Canonical
    // rotation makes this plain sequence equality.
    bool rotation_equal(const HullLoop& other) const {
        return order_ == other.order_;
    }

  private:
    std::vector<PointId> order_;
    std::unordered_map<PointId, std::size_t> pos_;
};

// Chains the directed boundary edges of T into the hull successor loop and
// verifies the single-cycle and all-points-left invariants. Throws
// MalformedBoundary when T's boundary is not a single convex CCW cycle.
HullLoop build_hull_loop(const Triangulation& t);

// Color of each hull edge [at(k), at(k+1)], k = 0..n-1, with respect to an
// exterior query point. Throws InsidePoint when d lies inside a triangle.
std::vector<EdgeColor> classify_hull_edges(const HullLoop& loop,
                                           const Triangulation& t,
                                           const Point& d);

// The two purple points and the red-run length for an exterior query point.
// Throws ContiguityViolation if the red edges do not form one contiguous arc,
// which is impossible over a valid triangulation.
PurpleReport purple_points(const HullLoop& loop, const Triangulation& t,
                           const Point& d);

// Independent gift-wrapping construction of the convex hull, straight from
// the point coordinates. Verification oracle: never touches triangulations.
HullLoop hull_oracle(const PointTable& table);

}  // namespace tri
