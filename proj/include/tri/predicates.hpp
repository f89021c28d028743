#pragma once

#include <array>
#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

#include "tri/errors.hpp"

namespace tri {

using Coord = std::int64_t;

// Coordinate magnitude bound. Keeps the orientation determinant exactly
// representable in a signed 128-bit intermediate with lots of headroom.
inline constexpr Coord kCoordLimit = Coord{1} << 30;

// A 2D point with exact integer coordinates, bounded at construction.
struct Point {
    Point() : x(0), y(0) {}
    Point(Coord px, Coord py) : x(px), y(py) {
        if (px < -kCoordLimit || px > kCoordLimit || py < -kCoordLimit ||
            py > kCoordLimit) {
            throw CoordinateOutOfRange("coordinate exceeds 2^30 bound");
        }
    }
    Coord x;
    Coord y;

    friend bool operator==(const Point&, const Point&) = default;
};

using Rational = boost::multiprecision::cpp_rational;

// Exact rational point, used by the verifier for interior sample points.
struct RationalPoint {
    RationalPoint() = default;
    RationalPoint(Rational px, Rational py) : x(std::move(px)), y(std::move(py)) {}
    explicit RationalPoint(const Point& p) : x(p.x), y(p.y) {}
    Rational x;
    Rational y;

    friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
};

enum class Orientation { CounterClockwise, Clockwise, Collinear };

// Sign of (b.x-a.x)(c.y-a.y) - (b.y-a.y)(c.x-a.x), computed exactly.
// CounterClockwise means one turns left following a -> b -> c.
Orientation orient(const Point& a, const Point& b, const Point& c) noexcept;

// Same predicate over exact rationals. Agrees with orient on integral input.
Orientation orient_rational(const RationalPoint& a, const RationalPoint& b,
                            const RationalPoint& c);

// True iff c and d lie on strictly different sides of the line through a, b.
// Throws DegenerateInput when either triple is collinear.
bool separated(const Point& a, const Point& b, const Point& c, const Point& d);
bool separated(const Point& a, const Point& b, const Point& c,
               const RationalPoint& d);

// True iff d is strictly inside triangle t: no vertex of t is separated from
// d by the opposite edge. t need not be given in CCW order.
bool inside_triangle(const std::array<Point, 3>& t, const Point& d);

// The classical orientation-predicate axioms as executable statements. Each must hold on
// every pairwise-distinct general-position tuple; they exist so tests can
// fuzz them. A vacuously satisfied implication returns true.
bool check_axiom1(const Point& a, const Point& b, const Point& c);
bool check_axiom2(const Point& a, const Point& b, const Point& c);
bool check_axiom3(const Point& a, const Point& b, const Point& c);
bool check_axiom4(const Point& a, const Point& b, const Point& c,
                  const Point& d);
bool check_axiom5(const Point& a, const Point& b, const Point& c,
                  const Point& d, const Point& e);

// The mirror of axiom 5 with b as the pivot:
//   bac & bad & bae & bcd & bde => bce.
bool check_axiom5_pivot_b(const Point& a, const Point& b, const Point& c,
                          const Point& d, const Point& e);

// If every vertex of t other than a and b lies strictly left of segment
// [a, b] and f lies strictly inside t, then f lies strictly left of [a, b].
// Returns that conclusion; throws PreconditionViolated when the premises do
// not hold.
bool check_left_of_segment_lemma(const Point& a, const Point& b,
                                 const std::array<Point, 3>& t,
                                 const RationalPoint& f);

}  // namespace tri
