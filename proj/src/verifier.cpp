#include "tri/verifier.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tri/rng.hpp"

namespace tri {

namespace {

using boost::multiprecision::cpp_int;

CheckResult pass(std::string name, std::string detail = "") {
    return {std::move(name), CheckStatus::Pass, std::move(detail)};
}

CheckResult fail(std::string name, std::string detail) {
    return {std::move(name), CheckStatus::Fail, std::move(detail)};
}

CheckResult skip(std::string name, std::string detail) {
    return {std::move(name), CheckStatus::Skip, std::move(detail)};
}

std::string triple_str(const OrientedTriangle& t) {
    return std::to_string(t.vertex(0)) + "," + std::to_string(t.vertex(1)) +
           "," + std::to_string(t.vertex(2));
}

cpp_int doubled_area(const Point& a, const Point& b, const Point& c) {
    __int128 det = static_cast<__int128>(b.x - a.x) * (c.y - a.y) -
                   static_cast<__int128>(b.y - a.y) * (c.x - a.x);
    cpp_int result = static_cast<std::int64_t>(det >> 64);
    result <<= 64;
    result += static_cast<std::uint64_t>(det);
    return result < 0 ? cpp_int(-result) : result;
}

// Closed containment of a rational point in a triangle given by ids; the
// triangle is re-oriented CCW from coordinates first.
bool contains_closed(const PointTable& table, const OrientedTriangle& t,
                     const RationalPoint& s) {
    std::array<Point, 3> v = {table[t.vertex(0)], table[t.vertex(1)],
                              table[t.vertex(2)]};
    Orientation o = orient(v[0], v[1], v[2]);
    if (o == Orientation::Collinear) return false;
    if (o == Orientation::Clockwise) std::swap(v[1], v[2]);
    for (int i = 0; i < 3; ++i) {
        if (orient_rational(RationalPoint(v[i]), RationalPoint(v[(i + 1) % 3]),
                            s) == Orientation::Clockwise) {
            return false;
        }
    }
    return true;
}

bool ids_in_range(const OrientedTriangle& t, std::size_t n) {
    return t.vertex(0) < n && t.vertex(1) < n && t.vertex(2) < n;
}

}  // namespace

CheckResult check_sizes(const Triangulation& t) {
    const std::size_t n = t.table().size();
    for (const OrientedTriangle& tr : t.triangles()) {
        if (!ids_in_range(tr, n)) {
            return fail("sizes", "triangle " + triple_str(tr) +
                                     " references a point out of range");
        }
        if (tr.vertex(0) == tr.vertex(1) || tr.vertex(1) == tr.vertex(2) ||
            tr.vertex(0) == tr.vertex(2)) {
            return fail("sizes",
                        "triangle " + triple_str(tr) + " repeats a vertex");
        }
    }
    return pass("sizes", std::to_string(t.size()) + " triangles are 3-sets");
}

CheckResult check_vertex_union(const Triangulation& t,
                               const PointTable& table) {
    std::vector<bool> seen(table.size(), false);
    for (const OrientedTriangle& tr : t.triangles()) {
        for (Idx3 i : {Idx3(0), Idx3(1), Idx3(2)}) {
            PointId v = tr.vertex(i);
            if (v >= table.size()) {
                return fail("vertex_union", "triangle " + triple_str(tr) +
                                                " references a point out of "
                                                "range");
            }
            seen[v] = true;
        }
    }
    for (PointId p = 0; p < table.size(); ++p) {
        if (!seen[p]) {
            return fail("vertex_union",
                        "point " + std::to_string(p) + " is in no triangle");
        }
    }
    return pass("vertex_union",
                "all " + std::to_string(table.size()) + " points covered");
}

CheckResult check_no_overlap(const Triangulation& t) {
    const PointTable& table = t.table();
    const auto& tris = t.triangles();
    for (std::size_t i = 0; i < tris.size(); ++i) {
        for (std::size_t j = i + 1; j < tris.size(); ++j) {
            const OrientedTriangle& s = tris[i];
            const OrientedTriangle& u = tris[j];
            std::array<Point, 3> sc = t.coords(s);
            std::array<Point, 3> uc = t.coords(u);
            // Vertex of one strictly inside the other.
            for (Idx3 k : {Idx3(0), Idx3(1), Idx3(2)}) {
                if (!s.has_vertex(u.vertex(k)) &&
                    inside_triangle(sc, table[u.vertex(k)])) {
                    return fail("no_overlap",
                                "vertex " + std::to_string(u.vertex(k)) +
                                    " inside triangle " + triple_str(s));
                }
                if (!u.has_vertex(s.vertex(k)) &&
                    inside_triangle(uc, table[s.vertex(k)])) {
                    return fail("no_overlap",
                                "vertex " + std::to_string(s.vertex(k)) +
                                    " inside triangle " + triple_str(u));
                }
            }
            // Proper crossings between edges with no shared endpoint.
            for (Idx3 k : {Idx3(0), Idx3(1), Idx3(2)}) {
                auto [p, q] = s.edge_opposite(k);
                for (Idx3 l : {Idx3(0), Idx3(1), Idx3(2)}) {
                    auto [r, w] = u.edge_opposite(l);
                    if (p == r || p == w || q == r || q == w) continue;
                    if (separated(table[p], table[q], table[r], table[w]) &&
                        separated(table[r], table[w], table[p], table[q])) {
                        return fail(
                            "no_overlap",
                            "edges {" + std::to_string(p) + "," +
                                std::to_string(q) + "} and {" +
                                std::to_string(r) + "," + std::to_string(w) +
                                "} cross");
                    }
                }
            }
        }
    }
    return pass("no_overlap",
                std::to_string(tris.size()) + " triangles pairwise disjoint");
}

CheckResult check_area_conservation(const Triangulation& t,
                                    const PointTable& table) {
    cpp_int total = 0;
    for (const OrientedTriangle& tr : t.triangles()) {
        auto c = t.coords(tr);
        total += doubled_area(c[0], c[1], c[2]);
    }
    HullLoop hull = hull_oracle(table);
    cpp_int hull_area = 0;
    const Point& origin = table[hull.at(0)];
    for (std::size_t k = 1; k + 1 < hull.size(); ++k) {
        const Point& b = table[hull.at(static_cast<std::ptrdiff_t>(k))];
        const Point& c = table[hull.at(static_cast<std::ptrdiff_t>(k) + 1)];
        hull_area += doubled_area(origin, b, c);
    }
    if (total != hull_area) {
        return fail("area_conservation",
                    "doubled triangle area sum " + total.str() +
                        " != doubled hull area " + hull_area.str());
    }
    return pass("area_conservation", "doubled area " + total.str());
}

CheckResult check_point_coverage_at(const Triangulation& t,
                                    std::span<const RationalPoint> samples) {
    if (samples.empty()) return skip("point_coverage", "no samples");
    for (std::size_t i = 0; i < samples.size(); ++i) {
        bool covered = false;
        for (const OrientedTriangle& tr : t.triangles()) {
            if (contains_closed(t.table(), tr, samples[i])) {
                covered = true;
                break;
            }
        }
        if (!covered) {
            return fail("point_coverage",
                        "sample " + std::to_string(i) + " not in any triangle");
        }
    }
    return pass("point_coverage",
                std::to_string(samples.size()) + " samples covered");
}

CheckResult check_point_coverage(const Triangulation& t,
                                 const PointTable& table, std::size_t samples,
                                 std::uint64_t seed) {
    if (samples == 0) return skip("point_coverage", "samples=0");
    auto pts = sample_interior_points(table, samples, seed);
    return check_point_coverage_at(t, pts);
}

CheckResult check_hull_blue_at(const Triangulation& t,
                               std::span<const RationalPoint> samples) {
    if (samples.empty()) return skip("hull_blue", "no samples");
    std::vector<Edge> boundary = t.boundary_edges();
    for (std::size_t i = 0; i < samples.size(); ++i) {
        for (const Edge& e : boundary) {
            if (t.edge_is_red(e, samples[i])) {
                return fail("hull_blue", "boundary edge {" +
                                             std::to_string(e.a) + "," +
                                             std::to_string(e.b) +
                                             "} red for interior sample " +
                                             std::to_string(i));
            }
        }
    }
    return pass("hull_blue", std::to_string(boundary.size()) +
                                 " boundary edges blue for " +
                                 std::to_string(samples.size()) + " samples");
}

CheckResult check_hull_blue(const Triangulation& t, const PointTable& table,
                            std::size_t samples, std::uint64_t seed) {
    if (samples == 0) return skip("hull_blue", "samples=0");
    auto pts = sample_interior_points(table, samples, seed + 1);
    return check_hull_blue_at(t, pts);
}

CheckResult check_euler_count(const Triangulation& t,
                              const PointTable& table) {
    std::size_t n = table.size();
    std::size_t h = hull_oracle(table).size();
    std::size_t expected = 2 * n - h - 2;
    if (t.size() != expected) {
        return fail("euler_count",
                    "|T| = " + std::to_string(t.size()) + ", expected 2*" +
                        std::to_string(n) + "-" + std::to_string(h) + "-2 = " +
                        std::to_string(expected));
    }
    return pass("euler_count", "|T| = " + std::to_string(expected));
}

CheckResult check_hull_equality(const Triangulation& t,
                                const PointTable& table) {
    HullLoop from_boundary = build_hull_loop(t);
    HullLoop from_points = hull_oracle(table);
    if (!from_boundary.rotation_equal(from_points)) {
        return fail("hull_equality",
                    "boundary loop disagrees with gift-wrapping oracle");
    }
    return pass("hull_equality",
                "hull of " + std::to_string(from_points.size()) + " vertices");
}

CheckResult check_red_run(const Triangulation& t, const PointTable& table,
                          std::span<const Point> external_points) {
    if (external_points.empty()) return skip("red_run", "no query points");
    HullLoop loop = build_hull_loop(t);
    std::size_t tested = 0;
    std::size_t skipped = 0;
    for (const Point& d : external_points) {
        if (t.find_containing(d)) {
            ++skipped;  // interior query: no purple points are defined
            continue;
        }
        std::vector<EdgeColor> colors = classify_hull_edges(loop, t, d);
        std::size_t changes = 0;
        for (std::size_t k = 0; k < colors.size(); ++k) {
            if (colors[k] != colors[(k + 1) % colors.size()]) ++changes;
        }
        if (changes != 2) {
            return fail("red_run", "expected 2 color changes, got " +
                                       std::to_string(changes));
        }
        PurpleReport purple = purple_points(loop, t, d);
        if (purple.run_length < 1) {
            return fail("red_run", "empty red arc");
        }
        // Fanning the query point must add exactly n_r triangles.
        std::vector<Point> extended = table.points();
        extended.emplace_back(d);
        PointTable ext(std::move(extended));
        Triangulation over_ext = Triangulation::from_triangles(
            ext, std::vector<OrientedTriangle>(t.triangles()));
        Triangulation after =
            over_ext.insert_outside(static_cast<PointId>(ext.size() - 1));
        if (after.size() != t.size() + purple.run_length) {
            return fail("red_run",
                        "insert_outside added " +
                            std::to_string(after.size() - t.size()) +
                            " triangles, expected n_r = " +
                            std::to_string(purple.run_length));
        }
        ++tested;
    }
    return pass("red_run", std::to_string(tested) + " query points, " +
                               std::to_string(skipped) + " interior skips");
}

std::vector<RationalPoint> sample_interior_points(const PointTable& table,
                                                  std::size_t count,
                                                  std::uint64_t seed) {
    HullLoop hull = hull_oracle(table);
    const std::size_t fans = hull.size() - 2;
    Rng rng(seed);
    std::vector<RationalPoint> samples;
    samples.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        std::size_t k = 1 + rng.below(fans);
        const Point& a = table[hull.at(0)];
        const Point& b = table[hull.at(static_cast<std::ptrdiff_t>(k))];
        const Point& c = table[hull.at(static_cast<std::ptrdiff_t>(k) + 1)];
        std::int64_t w1 = rng.range(1, 97);
        std::int64_t w2 = rng.range(1, 97);
        std::int64_t w3 = rng.range(1, 97);
        std::int64_t den = w1 + w2 + w3;
        samples.emplace_back(Rational(w1 * a.x + w2 * b.x + w3 * c.x, den),
                             Rational(w1 * a.y + w2 * b.y + w3 * c.y, den));
    }
    return samples;
}

std::vector<Point> make_external_queries(const PointTable& table,
                                         std::size_t count,
                                         std::uint64_t seed) {
    HullLoop hull = hull_oracle(table);
    Coord minx = table[0].x, maxx = table[0].x;
    Coord miny = table[0].y, maxy = table[0].y;
    for (const Point& p : table.points()) {
        minx = std::min(minx, p.x);
        maxx = std::max(maxx, p.x);
        miny = std::min(miny, p.y);
        maxy = std::max(maxy, p.y);
    }
    Coord extent = std::max<Coord>({maxx - minx, maxy - miny, 4});
    Coord lox = std::max(minx - 2 * extent, -kCoordLimit);
    Coord hix = std::min(maxx + 2 * extent, kCoordLimit);
    Coord loy = std::max(miny - 2 * extent, -kCoordLimit);
    Coord hiy = std::min(maxy + 2 * extent, kCoordLimit);

    Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::vector<Point> queries;
    for (std::size_t attempt = 0;
         attempt < count * 200 && queries.size() < count; ++attempt) {
        Point d(rng.range(lox, hix), rng.range(loy, hiy));
        bool outside = false;
        bool degenerate = false;
        for (std::size_t k = 0; k < hull.size(); ++k) {
            Orientation o =
                orient(table[hull.at(static_cast<std::ptrdiff_t>(k))],
                       table[hull.at(static_cast<std::ptrdiff_t>(k) + 1)], d);
            if (o == Orientation::Collinear) {
                degenerate = true;
                break;
            }
            if (o == Orientation::Clockwise) outside = true;
        }
        if (!degenerate && outside) queries.push_back(d);
    }
    return queries;
}

VerificationReport verify_all(const PointTable& table, std::size_t samples,
                              std::uint64_t seed) {
    table.validate();
    Triangulation t = triangulate(table);
    VerificationReport report;
    report.checks.push_back(check_sizes(t));
    report.checks.push_back(check_vertex_union(t, table));
    report.checks.push_back(check_no_overlap(t));
    report.checks.push_back(check_area_conservation(t, table));
    report.checks.push_back(check_point_coverage(t, table, samples, seed));
    report.checks.push_back(check_hull_blue(t, table, samples, seed));
    report.checks.push_back(check_euler_count(t, table));
    report.checks.push_back(check_hull_equality(t, table));
    report.checks.push_back(
        check_red_run(t, table, make_external_queries(table, 8, seed)));
    return report;
}

VerificationReport verify_document(const PointTable& table,
                                   const Triangulation& t,
                                   const std::vector<PointId>& declared_hull,
                                   std::size_t samples, std::uint64_t seed) {
    VerificationReport report;
    auto guarded = [&report](const std::string& name, auto&& run) {
        try {
            report.checks.push_back(run());
        } catch (const std::exception& e) {
            report.checks.push_back(fail(name, std::string("check aborted: ") +
                                                   e.what()));
        }
    };
    guarded("sizes", [&] { return check_sizes(t); });
    guarded("vertex_union", [&] { return check_vertex_union(t, table); });
    guarded("no_overlap", [&] { return check_no_overlap(t); });
    guarded("area_conservation",
            [&] { return check_area_conservation(t, table); });
    guarded("point_coverage",
            [&] { return check_point_coverage(t, table, samples, seed); });
    guarded("hull_blue", [&] { return check_hull_blue(t, table, samples, seed); });
    guarded("euler_count", [&] { return check_euler_count(t, table); });
    guarded("hull_equality", [&] { return check_hull_equality(t, table); });
    guarded("declared_hull", [&]() -> CheckResult {
        if (declared_hull.empty()) {
            return skip("declared_hull", "document declares no hull");
        }
        HullLoop declared = HullLoop::from_cycle(declared_hull);
        if (!declared.rotation_equal(hull_oracle(table))) {
            return fail("declared_hull",
                        "declared hull disagrees with gift-wrapping oracle");
        }
        return pass("declared_hull",
                    std::to_string(declared.size()) + " vertices");
    });
    return report;
}

VerificationReport verify_stepwise(const PointTable& table,
                                   std::size_t samples_per_step,
                                   std::uint64_t seed) {
    table.validate();
    std::map<std::string, std::vector<std::size_t>> failures;
    std::size_t steps = 0;
    auto record = [&failures](std::size_t step, const CheckResult& r) {
        if (!r.passed()) failures[r.name].push_back(step);
    };

    Triangulation t = Triangulation::from_triangles(
        table, {three_points(std::array<PointId, 3>{0, 1, 2}, table)});
    for (std::size_t k = 3; k <= table.size(); ++k) {
        if (k > 3) {
            PointId d = static_cast<PointId>(k - 1);
            if (auto container = t.find_containing(d)) {
                t = t.insert_inside(*container, d);
            } else {
                t = t.insert_outside(d);
            }
        }
        PointTable prefix = table.prefix(k);
        Triangulation tk = Triangulation::from_triangles(
            prefix, std::vector<OrientedTriangle>(t.triangles()));
        ++steps;
        record(k, check_sizes(tk));
        record(k, check_vertex_union(tk, prefix));
        record(k, check_no_overlap(tk));
        record(k, check_area_conservation(tk, prefix));
        record(k, check_point_coverage(tk, prefix, samples_per_step, seed + k));
        record(k, check_hull_blue(tk, prefix, samples_per_step, seed + k));
        record(k, check_euler_count(tk, prefix));
        record(k, check_hull_equality(tk, prefix));
    }

    VerificationReport report;
    if (failures.empty()) {
        report.checks.push_back(pass(
            "stepwise", "all checks hold at every one of " +
                            std::to_string(steps) + " insertion steps"));
    } else {
        for (const auto& [name, steps_failed] : failures) {
            std::string detail = "failed at step";
            for (std::size_t s : steps_failed) detail += " " + std::to_string(s);
            report.checks.push_back(fail("stepwise/" + name, detail));
        }
    }
    return report;
}

}  // namespace tri
