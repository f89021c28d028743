// Acceptance suite: one criterion per section, one PASS/FAIL line each.
// Usage: acceptance <path-to-cli>. Exits nonzero if any criterion fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "tri/generate.hpp"
#include "tri/io.hpp"
#include "tri/verifier.hpp"

namespace fs = std::filesystem;
using namespace tri;

namespace {

int failures = 0;

void report(const std::string& name, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "PASS" : "FAIL") << ": " << name;
    if (!ok && !detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "\n" << std::flush;
    if (!ok) ++failures;
}

int run(const std::string& command) { return std::system(command.c_str()); }

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

// --- 1: the axiom fuzzer reports zero violations over 10^5 random tuples ---
void criterion_axiom_fuzz(const std::string& cli, const fs::path& tmp) {
    fs::path log = tmp / "fuzz.log";
    int rc = run(cli + " fuzz-axioms --trials 100000 --seed 42 --bound 1000 > " +
                 log.string());
    std::string out = slurp(log);
    bool ok = rc == 0 && out.find("total_violations=0") != std::string::npos;
    report("axiom fuzz: 100000 trials, 0 violations", ok,
           "exit " + std::to_string(rc));
}

// --- 2: axioms 4 and 5 hold on every general-position tuple of a 4x4 grid ---
void criterion_grid_exhaustion() {
    std::vector<Point> grid;
    for (Coord x = 0; x <= 3; ++x) {
        for (Coord y = 0; y <= 3; ++y) grid.emplace_back(x, y);
    }
    const std::size_t n = grid.size();

    auto collinear = [&](std::size_t i, std::size_t j, std::size_t k) {
        return orient(grid[i], grid[j], grid[k]) == Orientation::Collinear;
    };

    std::size_t tested4 = 0, tested5 = 0, violations = 0;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (b == a) continue;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == a || c == b) continue;
                if (collinear(a, b, c)) continue;
                for (std::size_t d = 0; d < n; ++d) {
                    if (d == a || d == b || d == c) continue;
                    if (collinear(a, b, d) || collinear(a, c, d) ||
                        collinear(b, c, d)) {
                        continue;
                    }
                    ++tested4;
                    if (!check_axiom4(grid[a], grid[b], grid[c], grid[d])) {
                        ++violations;
                    }
                    for (std::size_t e = 0; e < n; ++e) {
                        if (e == a || e == b || e == c || e == d) continue;
                        if (collinear(a, b, e) || collinear(a, c, e) ||
                            collinear(a, d, e) || collinear(b, c, e) ||
                            collinear(b, d, e) || collinear(c, d, e)) {
                            continue;
                        }
                        ++tested5;
                        if (!check_axiom5(grid[a], grid[b], grid[c], grid[d],
                                          grid[e])) {
                            ++violations;
                        }
                        if (!check_axiom5_pivot_b(grid[a], grid[b], grid[c],
                                                  grid[d], grid[e])) {
                            ++violations;
                        }
                    }
                }
            }
        }
    }
    report("grid exhaustion: axioms 4 and 5 on all general-position tuples "
           "of [0,3]x[0,3]",
           violations == 0 && tested4 > 0 && tested5 > 0,
           std::to_string(violations) + " violations over " +
               std::to_string(tested4) + "+" + std::to_string(tested5) +
               " tuples");
}

// --- 3: gen | verify round trip exits 0 for 100 random inputs ---
void criterion_end_to_end(const std::string& cli, const fs::path& tmp) {
    bool ok = true;
    std::string detail;
    for (std::uint64_t seed = 0; seed < 100 && ok; ++seed) {
        std::size_t n = 3 + (seed * 197) / 99;  // spreads over 3..200
        fs::path pts = tmp / ("e2e_" + std::to_string(seed) + ".pts");
        int rc = run(cli + " gen --n " + std::to_string(n) + " --seed " +
                     std::to_string(seed) + " --bound 1000000 --output " +
                     pts.string() + " > /dev/null");
        if (rc == 0) {
            rc = run(cli + " verify --input " + pts.string() +
                     " --samples 1000 --seed " + std::to_string(seed) +
                     " > /dev/null");
        }
        if (rc != 0) {
            ok = false;
            detail = "seed " + std::to_string(seed) + " n " +
                     std::to_string(n) + " exit " + std::to_string(rc);
        }
    }
    report("end-to-end: verify exits 0 on 100 generated inputs, n in 3..200",
           ok, detail);
}

// --- 4: every check holds after every single insertion step ---
void criterion_stepwise() {
    bool ok = true;
    std::string detail;
    for (std::uint64_t i = 0; i < 20 && ok; ++i) {
        std::size_t n = 3 + (i * 57) / 19;  // spreads over 3..60
        PointTable table = generate_points(n, 100 + i, 1000000);
        VerificationReport r = verify_stepwise(table, 50, i);
        if (!r.overall()) {
            ok = false;
            for (const CheckResult& c : r.checks) {
                if (!c.passed()) detail = c.name + ": " + c.detail;
            }
        }
    }
    report("loop invariants: stepwise verification on 20 inputs, n <= 60", ok,
           detail);
}

// --- 5: hull classification has exactly one red arc per exterior point ---
void criterion_red_run() {
    bool ok = true;
    std::string detail;
    for (std::uint64_t i = 0; i < 20 && ok; ++i) {
        std::size_t n = 10 + (i * 70) / 19;
        PointTable table = generate_points(n, 200 + i, 100000);
        Triangulation t = triangulate(table);
        HullLoop loop = build_hull_loop(t);
        for (const Point& d : make_external_queries(table, 20, 300 + i)) {
            auto colors = classify_hull_edges(loop, t, d);
            std::size_t changes = 0;
            for (std::size_t k = 0; k < colors.size(); ++k) {
                if (colors[k] != colors[(k + 1) % colors.size()]) ++changes;
            }
            PurpleReport purple = purple_points(loop, t, d);
            std::size_t reds = 0;
            for (EdgeColor c : colors) {
                if (c == EdgeColor::Red) ++reds;
            }

            std::vector<Point> pts = table.points();
            pts.push_back(d);
            PointTable ext(std::move(pts));
            Triangulation over_ext = Triangulation::from_triangles(
                ext, std::vector<OrientedTriangle>(t.triangles()));
            Triangulation after =
                over_ext.insert_outside(static_cast<PointId>(ext.size() - 1));

            if (changes != 2 || purple.p1 == purple.p2 ||
                purple.run_length < 1 || purple.run_length != reds ||
                after.size() != t.size() + purple.run_length) {
                ok = false;
                detail = "seed " + std::to_string(200 + i) + " query (" +
                         std::to_string(d.x) + "," + std::to_string(d.y) + ")";
                break;
            }
        }
    }
    report("red-run structure: 2 color changes, 2 purple points, contiguous "
           "arc, n_r new triangles",
           ok, detail);
}

// --- 6: the worked micro-examples come out exactly as documented ---
void criterion_micro_examples() {
    PointTable square({Point(0, 0), Point(4, 0), Point(4, 4), Point(0, 4)});
    bool ok = triangulate(square).size() == 2;

    PointTable with_interior(
        {Point(0, 0), Point(4, 0), Point(0, 4), Point(1, 1)});
    ok = ok && triangulate(with_interior).size() == 3;

    PointTable tri3({Point(0, 0), Point(4, 0), Point(0, 4)});
    Triangulation t = triangulate(tri3);
    PurpleReport r = purple_points(build_hull_loop(t), t, Point(5, 5));
    ok = ok && r.p1 == 1 && r.p2 == 2 && r.run_length == 1;

    report("micro-examples: square -> 2 triangles, interior split -> 3, "
           "(5,5) purple pair (1,2) with n_r=1",
           ok);
}

// --- 7: each verifier check fails on its documented corrupted input ---
void criterion_negative_controls() {
    bool ok = true;
    std::string detail;
    auto expect_fail = [&](const CheckResult& r, const std::string& what) {
        if (r.status != CheckStatus::Fail) {
            ok = false;
            detail = what + " not flagged";
        }
    };

    PointTable over_table({Point(0, 0), Point(4, 0), Point(0, 4), Point(1, 1),
                           Point(5, 1), Point(1, 5)});
    Triangulation overlapping = Triangulation::from_triangles(
        over_table,
        {three_points(std::array<PointId, 3>{0, 1, 2}, over_table),
         three_points(std::array<PointId, 3>{3, 4, 5}, over_table)});
    expect_fail(check_no_overlap(overlapping), "overlapping pair");

    PointTable square({Point(0, 0), Point(4, 0), Point(4, 4), Point(0, 4)});
    Triangulation full = triangulate(square);
    Triangulation dropped =
        Triangulation::from_triangles(square, {full.triangles()[0]});
    expect_fail(check_area_conservation(dropped, square),
                "dropped triangle (area)");
    expect_fail(check_euler_count(dropped, square),
                "dropped triangle (count)");

    Triangulation repeated = Triangulation::from_triangles(
        square, {OrientedTriangle::unchecked(0, 1, 1)});
    expect_fail(check_sizes(repeated), "repeated vertex");

    std::vector<RationalPoint> outside = {
        RationalPoint(Rational(5), Rational(5))};
    expect_fail(check_hull_blue_at(full, outside),
                "exterior point posing as interior sample");

    report("negative controls: every corrupted input fails its check", ok,
           detail);
}

// --- 8: triangulate produces byte-identical outputs across runs ---
void criterion_determinism(const std::string& cli, const fs::path& tmp) {
    fs::path pts = tmp / "det.pts";
    write_file(pts.string(),
               render_point_file(generate_points(60, 77, 1000000), ""));
    bool ok = true;
    std::string detail;
    for (int r = 1; r <= 2 && ok; ++r) {
        int rc = run(cli + " triangulate --input " + pts.string() +
                     " --output " + (tmp / ("det" + std::to_string(r) + ".doc")).string() +
                     " --svg " + (tmp / ("det" + std::to_string(r) + ".svg")).string() +
                     " > /dev/null");
        if (rc != 0) {
            ok = false;
            detail = "exit " + std::to_string(rc);
        }
    }
    if (ok) {
        ok = slurp(tmp / "det1.doc") == slurp(tmp / "det2.doc") &&
             slurp(tmp / "det1.svg") == slurp(tmp / "det2.svg") &&
             !slurp(tmp / "det1.doc").empty() &&
             !slurp(tmp / "det1.svg").empty();
        if (!ok) detail = "outputs differ";
    }
    report("determinism: repeated runs give byte-identical document and SVG",
           ok, detail);
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: acceptance <path-to-cli>\n";
        return 2;
    }
    std::string cli = argv[1];
    fs::path tmp = fs::temp_directory_path() / "tri_acceptance";
    fs::create_directories(tmp);

    auto timed = [](auto&& f) {
        auto start = std::chrono::steady_clock::now();
        f();
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        std::cout << "  (" << ms << " ms)\n";
    };

    timed([&] { criterion_axiom_fuzz(cli, tmp); });
    timed([&] { criterion_grid_exhaustion(); });
    timed([&] { criterion_end_to_end(cli, tmp); });
    timed([&] { criterion_stepwise(); });
    timed([&] { criterion_red_run(); });
    timed([&] { criterion_micro_examples(); });
    timed([&] { criterion_negative_controls(); });
    timed([&] { criterion_determinism(cli, tmp); });

    std::cout << (failures == 0 ? "ALL CRITERIA PASS"
                                : std::to_string(failures) + " CRITERIA FAILED")
              << "\n";
    return failures == 0 ? 0 : 1;
}
