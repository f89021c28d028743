#include "tri/predicates.hpp"

#include <limits>

namespace tri {

namespace {

using boost::multiprecision::cpp_int;

Orientation sign_of(__int128 det) noexcept {
    if (det > 0) return Orientation::CounterClockwise;
    if (det < 0) return Orientation::Clockwise;
    return Orientation::Collinear;
}

bool ccw(const Point& a, const Point& b, const Point& c) {
    Orientation o = orient(a, b, c);
    if (o == Orientation::Collinear) {
        throw DegenerateInput("collinear triple in axiom check");
    }
    return o == Orientation::CounterClockwise;
}

struct SmallRational {
    std::int64_t num;
    std::int64_t den;
};

// Fast-path bounds: with |num| <= 2^39 and den <= 2^9 the cross-multiplied
// determinant below stays under 2^118, well inside a signed 128-bit value.
constexpr std::int64_t kFastNum = std::int64_t{1} << 39;
constexpr std::int64_t kFastDen = std::int64_t{1} << 9;

bool extract_small(const Rational& q, SmallRational& out) {
    const cpp_int& n = numerator(q);
    const cpp_int& d = denominator(q);
    if (n > kFastNum || n < -kFastNum || d > kFastDen) return false;
    out.num = n.convert_to<std::int64_t>();
    out.den = d.convert_to<std::int64_t>();
    return true;
}

// Sign of (b.x-a.x)(c.y-a.y) - (b.y-a.y)(c.x-a.x) with rational coordinates,
// cleared of (positive) denominators so only integer products are compared.
template <typename Int, typename R>
Orientation orient_cleared(const R& axn, const R& axd, const R& ayn,
                           const R& ayd, const R& bxn, const R& bxd,
                           const R& byn, const R& byd, const R& cxn,
                           const R& cxd, const R& cyn, const R& cyd) {
    Int xb = (Int(bxn) * axd - Int(axn) * bxd) * cxd;
    Int xc = (Int(cxn) * axd - Int(axn) * cxd) * bxd;
    Int yb = (Int(byn) * ayd - Int(ayn) * byd) * cyd;
    Int yc = (Int(cyn) * ayd - Int(ayn) * cyd) * byd;
    Int det = xb * yc - yb * xc;
    if (det > 0) return Orientation::CounterClockwise;
    if (det < 0) return Orientation::Clockwise;
    return Orientation::Collinear;
}

}  // namespace

Orientation orient(const Point& a, const Point& b, const Point& c) noexcept {
    __int128 det = static_cast<__int128>(b.x - a.x) * (c.y - a.y) -
                   static_cast<__int128>(b.y - a.y) * (c.x - a.x);
    return sign_of(det);
}

Orientation orient_rational(const RationalPoint& a, const RationalPoint& b,
                            const RationalPoint& c) {
    SmallRational ax, ay, bx, by, cx, cy;
    if (extract_small(a.x, ax) && extract_small(a.y, ay) &&
        extract_small(b.x, bx) && extract_small(b.y, by) &&
        extract_small(c.x, cx) && extract_small(c.y, cy)) {
        return orient_cleared<__int128, std::int64_t>(
            ax.num, ax.den, ay.num, ay.den, bx.num, bx.den, by.num, by.den,
            cx.num, cx.den, cy.num, cy.den);
    }
    return orient_cleared<cpp_int, cpp_int>(
        numerator(a.x), denominator(a.x), numerator(a.y), denominator(a.y),
        numerator(b.x), denominator(b.x), numerator(b.y), denominator(b.y),
        numerator(c.x), denominator(c.x), numerator(c.y), denominator(c.y));
}

bool separated(const Point& a, const Point& b, const Point& c,
               const Point& d) {
    Orientation oc = orient(a, b, c);
    Orientation od = orient(a, b, d);
    if (oc == Orientation::Collinear || od == Orientation::Collinear) {
        throw DegenerateInput("collinear triple in separation test");
    }
    return oc != od;
}

bool separated(const Point& a, const Point& b, const Point& c,
               const RationalPoint& d) {
    Orientation oc = orient(a, b, c);
    Orientation od =
        orient_rational(RationalPoint(a), RationalPoint(b), d);
    if (oc == Orientation::Collinear || od == Orientation::Collinear) {
        throw DegenerateInput("collinear triple in separation test");
    }
    return oc != od;
}

bool inside_triangle(const std::array<Point, 3>& t, const Point& d) {
    return !separated(t[0], t[1], t[2], d) && !separated(t[1], t[2], t[0], d) &&
           !separated(t[2], t[0], t[1], d);
}

bool check_axiom1(const Point& a, const Point& b, const Point& c) {
    return !ccw(a, b, c) || ccw(b, c, a);
}

bool check_axiom2(const Point& a, const Point& b, const Point& c) {
    return !ccw(a, b, c) || !ccw(b, a, c);
}

bool check_axiom3(const Point& a, const Point& b, const Point& c) {
    return ccw(a, b, c) || ccw(b, a, c);
}

bool check_axiom4(const Point& a, const Point& b, const Point& c,
                  const Point& d) {
    // Evaluate every triple of the statement so a collinear one is always
    // reported, even when an earlier premise already fails.
    bool abd = ccw(a, b, d), bcd = ccw(b, c, d), cad = ccw(c, a, d);
    bool abc = ccw(a, b, c);
    return !(abd && bcd && cad) || abc;
}

bool check_axiom5(const Point& a, const Point& b, const Point& c,
                  const Point& d, const Point& e) {
    bool abc = ccw(a, b, c), abd = ccw(a, b, d), abe = ccw(a, b, e);
    bool acd = ccw(a, c, d), ade = ccw(a, d, e);
    bool ace = ccw(a, c, e);
    return !(abc && abd && abe && acd && ade) || ace;
}

bool check_axiom5_pivot_b(const Point& a, const Point& b, const Point& c,
                          const Point& d, const Point& e) {
    bool bac = ccw(b, a, c), bad = ccw(b, a, d), bae = ccw(b, a, e);
    bool bcd = ccw(b, c, d), bde = ccw(b, d, e);
    bool bce = ccw(b, c, e);
    return !(bac && bad && bae && bcd && bde) || bce;
}

bool check_left_of_segment_lemma(const Point& a, const Point& b,
                                 const std::array<Point, 3>& t,
                                 const RationalPoint& f) {
    // Vertices equal to an endpoint of [a, b] are exempt from the left test.
    for (const Point& v : t) {
        if (v == a || v == b) continue;
        if (orient(a, b, v) != Orientation::CounterClockwise) {
            throw PreconditionViolated(
                "triangle vertex not strictly left of the segment");
        }
    }
    std::array<Point, 3> u = t;
    Orientation to = orient(u[0], u[1], u[2]);
    if (to == Orientation::Collinear) {
        throw DegenerateInput("degenerate triangle in lemma check");
    }
    if (to == Orientation::Clockwise) std::swap(u[1], u[2]);
    for (int i = 0; i < 3; ++i) {
        Orientation o = orient_rational(RationalPoint(u[i]),
                                        RationalPoint(u[(i + 1) % 3]), f);
        if (o != Orientation::CounterClockwise) {
            throw PreconditionViolated("point not strictly inside the triangle");
        }
    }
    return orient_rational(RationalPoint(a), RationalPoint(b), f) ==
           Orientation::CounterClockwise;
}

}  // namespace tri
