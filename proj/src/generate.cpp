#include "tri/generate.hpp"

#include "tri/rng.hpp"

namespace tri {

namespace {

constexpr std::size_t kRejectionBudget = 1000000;

bool extends_general_position(const std::vector<Point>& points,
                              const Point& candidate) {
    for (const Point& p : points) {
        if (p == candidate) return false;
    }
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            if (orient(points[i], points[j], candidate) ==
                Orientation::Collinear) {
                return false;
            }
        }
    }
    return true;
}

bool ccw(const Point& a, const Point& b, const Point& c) {
    return orient(a, b, c) == Orientation::CounterClockwise;
}

// Random point strictly inside the (non-degenerate) triangle abc: a convex
// combination with integer weights in [1, 97].
RationalPoint random_interior(Rng& rng, const Point& a, const Point& b,
                              const Point& c) {
    std::int64_t w1 = rng.range(1, 97);
    std::int64_t w2 = rng.range(1, 97);
    std::int64_t w3 = rng.range(1, 97);
    std::int64_t den = w1 + w2 + w3;
    return RationalPoint(Rational(w1 * a.x + w2 * b.x + w3 * c.x, den),
                         Rational(w1 * a.y + w2 * b.y + w3 * c.y, den));
}

}  // namespace

PointTable generate_points(std::size_t n, std::uint64_t seed, Coord bound) {
    if (n < 3) throw InputError("need n >= 3");
    if (bound < 1 || bound > kCoordLimit) {
        throw InputError("bound must be in [1, 2^30]");
    }
    // A no-three-collinear subset of an m x m grid has at most 2m points.
    std::uint64_t side = 2 * static_cast<std::uint64_t>(bound) + 1;
    if (n > 2 * side) {
        throw GenerationExhausted("requested density is impossible on a " +
                                  std::to_string(side) + "x" +
                                  std::to_string(side) + " grid");
    }
    Rng rng(seed);
    std::vector<Point> points;
    points.reserve(n);
    std::size_t rejected = 0;
    while (points.size() < n) {
        Point candidate(rng.range(-bound, bound), rng.range(-bound, bound));
        if (extends_general_position(points, candidate)) {
            points.push_back(candidate);
        } else if (++rejected >= kRejectionBudget) {
            throw GenerationExhausted(
                "gave up after " + std::to_string(kRejectionBudget) +
                " rejected candidates with " + std::to_string(points.size()) +
                " of " + std::to_string(n) + " points placed");
        }
    }
    return PointTable(std::move(points));
}

FuzzReport fuzz_axioms(std::size_t trials, std::uint64_t seed, Coord bound) {
    if (bound < 1 || bound > kCoordLimit) {
        throw InputError("bound must be in [1, 2^30]");
    }
    FuzzReport report;
    report.trials = trials;
    FuzzCounter ax1{"axiom1"}, ax2{"axiom2"}, ax3{"axiom3"}, ax4{"axiom4"},
        ax5{"axiom5"}, ax5b{"axiom5_pivot_b"}, lemma{"lemma"},
        lemma_shared{"lemma_shared_vertex"};

    Rng rng(seed);
    auto tally = [](FuzzCounter& counter, bool premise, bool holds) {
        if (premise) {
            ++counter.tested;
            if (!holds) ++counter.violations;
        } else {
            ++counter.vacuous;
        }
    };

    for (std::size_t trial = 0; trial < trials; ++trial) {
        std::vector<Point> pts;
        pts.reserve(5);
        std::size_t rejected = 0;
        while (pts.size() < 5) {
            Point candidate(rng.range(-bound, bound), rng.range(-bound, bound));
            if (extends_general_position(pts, candidate)) {
                pts.push_back(candidate);
            } else if (++rejected >= kRejectionBudget) {
                throw GenerationExhausted("cannot draw 5 points in general "
                                          "position within the bound");
            }
        }
        const Point &a = pts[0], &b = pts[1], &c = pts[2], &d = pts[3],
                    &e = pts[4];

        tally(ax1, ccw(a, b, c), check_axiom1(a, b, c));
        tally(ax2, ccw(a, b, c), check_axiom2(a, b, c));
        tally(ax3, true, check_axiom3(a, b, c));
        tally(ax4, ccw(a, b, d) && ccw(b, c, d) && ccw(c, a, d),
              check_axiom4(a, b, c, d));
        tally(ax5,
              ccw(a, b, c) && ccw(a, b, d) && ccw(a, b, e) && ccw(a, c, d) &&
                  ccw(a, d, e),
              check_axiom5(a, b, c, d, e));
        tally(ax5b,
              ccw(b, a, c) && ccw(b, a, d) && ccw(b, a, e) && ccw(b, c, d) &&
                  ccw(b, d, e),
              check_axiom5_pivot_b(a, b, c, d, e));

        // Lemma instance: triangle {c, d, e} entirely strictly left of [a, b].
        if (ccw(a, b, c) && ccw(a, b, d) && ccw(a, b, e)) {
            RationalPoint f = random_interior(rng, c, d, e);
            tally(lemma, true, check_left_of_segment_lemma(a, b, {c, d, e}, f));
        } else {
            ++lemma.vacuous;
        }
        // Shared-vertex case: b itself is a triangle vertex.
        if (ccw(a, b, d) && ccw(a, b, e) &&
            orient(b, d, e) != Orientation::Collinear) {
            RationalPoint f = random_interior(rng, b, d, e);
            tally(lemma_shared, true,
                  check_left_of_segment_lemma(a, b, {b, d, e}, f));
        } else {
            ++lemma_shared.vacuous;
        }
    }

    report.counters = {ax1, ax2, ax3, ax4, ax5, ax5b, lemma, lemma_shared};
    return report;
}

}  // namespace tri
