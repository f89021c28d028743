#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tri/hull.hpp"

namespace tri {

enum class CheckStatus { Pass, Fail, Skip };

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    std::string detail;

    bool passed() const { return status != CheckStatus::Fail; }
};

struct VerificationReport {
    std::vector<CheckResult> checks;

    bool overall() const {
        for (const CheckResult& c : checks) {
            if (!c.passed()) return false;
        }
        return true;
    }
};

// Every triangle has exactly 3 pairwise-distinct vertices with ids in range.
CheckResult check_sizes(const Triangulation& t);

// The union of all triangle vertex sets equals the set of all point ids.
CheckResult check_vertex_union(const Triangulation& t, const PointTable& table);

// Brute-force O(|T|^2) overlap oracle: no vertex of one triangle strictly
// inside another, no proper edge crossing between triangles. Independent of
// how the triangulation was built.
CheckResult check_no_overlap(const Triangulation& t);

// Sum of exact doubled triangle areas equals the doubled area of the
// gift-wrapped hull polygon. With non-overlap this implies coverage.
CheckResult check_area_conservation(const Triangulation& t,
                                    const PointTable& table);

// Random interior rational points all land inside or on some triangle.
CheckResult check_point_coverage(const Triangulation& t,
                                 const PointTable& table, std::size_t samples,
                                 std::uint64_t seed);
CheckResult check_point_coverage_at(const Triangulation& t,
                                    std::span<const RationalPoint> samples);

// Every boundary edge is blue with respect to every interior sample point.
CheckResult check_hull_blue(const Triangulation& t, const PointTable& table,
                            std::size_t samples, std::uint64_t seed);
CheckResult check_hull_blue_at(const Triangulation& t,
                               std::span<const RationalPoint> samples);

// |T| = 2n - h - 2 with h the gift-wrapped hull size.
CheckResult check_euler_count(const Triangulation& t, const PointTable& table);

// build_hull_loop agrees with the gift-wrapping oracle up to rotation.
CheckResult check_hull_equality(const Triangulation& t,
                                const PointTable& table);

// For each exterior query point: exactly two color changes around the hull,
// a contiguous red arc of length n_r >= 1, and insert_outside adds exactly
// n_r triangles. Interior query points are recorded as skipped.
CheckResult check_red_run(const Triangulation& t, const PointTable& table,
                          std::span<const Point> external_points);

// Interior rational samples: random convex combinations, with integer weights
// in [1, 97], of fan triangles of the gift-wrapped hull polygon.
std::vector<RationalPoint> sample_interior_points(const PointTable& table,
                                                  std::size_t count,
                                                  std::uint64_t seed);

// Deterministic exterior query points for red-run checks: points outside the
// bounding box, rejected when collinear with any hull edge. May return fewer
// than requested when the coordinate bound leaves no room.
std::vector<Point> make_external_queries(const PointTable& table,
                                         std::size_t count,
                                         std::uint64_t seed);

// Triangulates the table and runs the whole battery of checks.
VerificationReport verify_all(const PointTable& table, std::size_t samples,
                              std::uint64_t seed);

// Checks an externally supplied triangle list (and optional declared hull)
// against the same battery. Individual check crashes become failures.
VerificationReport verify_document(const PointTable& table,
                                   const Triangulation& t,
                                   const std::vector<PointId>& declared_hull,
                                   std::size_t samples, std::uint64_t seed);

// Runs the checks after every single insertion step of the incremental
// algorithm; the correctness properties are loop invariants.
VerificationReport verify_stepwise(const PointTable& table,
                                   std::size_t samples_per_step,
                                   std::uint64_t seed);

}  // namespace tri
