#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tri/generate.hpp"
#include "tri/hull.hpp"
#include "tri/io.hpp"
#include "tri/svg.hpp"
#include "tri/verifier.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitValidation = 2;
constexpr int kExitInternal = 3;

const char* status_str(tri::CheckStatus s) {
    switch (s) {
        case tri::CheckStatus::Pass: return "PASS";
        case tri::CheckStatus::Fail: return "FAIL";
        case tri::CheckStatus::Skip: return "SKIPPED";
    }
    return "?";
}

int print_report(const tri::VerificationReport& report) {
    for (const tri::CheckResult& c : report.checks) {
        std::cout << c.name << " " << status_str(c.status);
        if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
        std::cout << "\n";
    }
    std::cout << "overall " << (report.overall() ? "PASS" : "FAIL") << "\n";
    return report.overall() ? kExitOk : kExitParse;
}

int cmd_triangulate(const std::string& input, const std::string& output,
                    const std::string& svg_path) {
    tri::PointTable table = tri::parse_point_file(tri::read_file(input));
    table.validate();
    tri::Triangulation t = tri::triangulate(table);
    tri::write_file(output, tri::render_document(tri::make_document(t)));
    if (!svg_path.empty()) {
        tri::write_file(svg_path, tri::render_svg(t, tri::build_hull_loop(t)));
    }
    std::cout << "triangulated " << table.size() << " points into " << t.size()
              << " triangles\n";
    return kExitOk;
}

int cmd_verify(const std::string& input, std::size_t samples,
               std::uint64_t seed, bool check_document) {
    if (check_document) {
        tri::TriangulationDocument doc =
            tri::parse_document(tri::read_file(input), /*strict=*/false);
        tri::PointTable table{std::vector<tri::Point>(doc.points)};
        table.validate();
        std::vector<tri::OrientedTriangle> tris;
        tris.reserve(doc.triangles.size());
        for (const auto& tr : doc.triangles) {
            tris.push_back(tri::OrientedTriangle::unchecked(tr[0], tr[1], tr[2]));
        }
        tri::Triangulation t =
            tri::Triangulation::from_triangles(table, std::move(tris));
        return print_report(
            tri::verify_document(table, t, doc.hull, samples, seed));
    }
    tri::PointTable table = tri::parse_point_file(tri::read_file(input));
    return print_report(tri::verify_all(table, samples, seed));
}

int cmd_classify(const std::string& input,
                 const std::vector<std::int64_t>& point) {
    tri::PointTable table = tri::parse_point_file(tri::read_file(input));
    tri::Triangulation t = tri::triangulate(table);
    tri::Point d(point[0], point[1]);
    if (auto container = t.find_containing(d)) {
        std::cout << "INSIDE: triangle " << container->vertex(0) << ","
                  << container->vertex(1) << "," << container->vertex(2)
                  << "\n";
        return kExitOk;
    }
    tri::HullLoop loop = tri::build_hull_loop(t);
    std::vector<tri::EdgeColor> colors = tri::classify_hull_edges(loop, t, d);
    for (std::size_t k = 0; k < loop.size(); ++k) {
        std::cout << "edge " << loop.at(static_cast<std::ptrdiff_t>(k)) << "-"
                  << loop.at(static_cast<std::ptrdiff_t>(k) + 1) << " "
                  << (colors[k] == tri::EdgeColor::Red ? "RED" : "BLUE")
                  << "\n";
    }
    tri::PurpleReport purple = tri::purple_points(loop, t, d);
    std::cout << "p1=" << purple.p1 << " p2=" << purple.p2
              << " n_r=" << purple.run_length << "\n";
    return kExitOk;
}

int cmd_fuzz(std::size_t trials, std::uint64_t seed, tri::Coord bound) {
    tri::FuzzReport report = tri::fuzz_axioms(trials, seed, bound);
    for (const tri::FuzzCounter& c : report.counters) {
        std::cout << c.name << ": tested=" << c.tested
                  << " vacuous=" << c.vacuous << " violations=" << c.violations
                  << "\n";
    }
    std::cout << "trials=" << report.trials
              << " total_violations=" << report.total_violations() << "\n";
    return report.total_violations() == 0 ? kExitOk : kExitParse;
}

int cmd_gen(std::size_t n, std::uint64_t seed, tri::Coord bound,
            const std::string& output) {
    tri::PointTable table = tri::generate_points(n, seed, bound);
    std::string header = "generated n=" + std::to_string(n) +
                         " seed=" + std::to_string(seed) +
                         " bound=" + std::to_string(bound);
    tri::write_file(output, tri::render_point_file(table, header));
    std::cout << "wrote " << n << " points to " << output << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tricheck: exact incremental triangulation with a "
                 "property-based verification harness"};
    app.require_subcommand(1);

    std::string input, output, svg_path;
    std::size_t samples = 1000;
    std::uint64_t seed = 0;
    bool check_document = false;
    std::vector<std::int64_t> point;
    std::size_t trials = 100000;
    tri::Coord bound = 1000;
    std::size_t gen_n = 0;

    CLI::App* tri_cmd =
        app.add_subcommand("triangulate", "triangulate a point file");
    tri_cmd->add_option("--input", input, "point file")->required();
    tri_cmd->add_option("--output", output, "triangulation document")
        ->required();
    tri_cmd->add_option("--svg", svg_path, "optional SVG figure");

    CLI::App* verify_cmd = app.add_subcommand(
        "verify", "triangulate and check every correctness property");
    verify_cmd->add_option("--input", input, "point file (or document)")
        ->required();
    verify_cmd->add_option("--samples", samples, "interior sample count");
    verify_cmd->add_option("--seed", seed, "sampling seed");
    verify_cmd->add_flag("--check-document", check_document,
                         "input is a triangulation document to replay");

    CLI::App* classify_cmd = app.add_subcommand(
        "classify", "color hull edges red/blue against a query point");
    classify_cmd->add_option("--input", input, "point file")->required();
    classify_cmd->add_option("--point", point, "query point: X Y")
        ->expected(2)
        ->required();

    CLI::App* fuzz_cmd = app.add_subcommand(
        "fuzz-axioms", "fuzz the orientation axioms and the left-of lemma");
    fuzz_cmd->add_option("--trials", trials, "number of random tuples");
    fuzz_cmd->add_option("--seed", seed, "rng seed");
    fuzz_cmd->add_option("--bound", bound, "coordinate bound");

    CLI::App* gen_cmd = app.add_subcommand(
        "gen", "generate a random general-position point file");
    gen_cmd->add_option("--n", gen_n, "number of points")->required();
    gen_cmd->add_option("--seed", seed, "rng seed");
    gen_cmd->add_option("--bound", bound, "coordinate bound")
        ->default_val(tri::Coord(1000000));
    gen_cmd->add_option("--output", output, "point file to write")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitParse;
    }

    try {
        if (tri_cmd->parsed()) return cmd_triangulate(input, output, svg_path);
        if (verify_cmd->parsed())
            return cmd_verify(input, samples, seed, check_document);
        if (classify_cmd->parsed()) return cmd_classify(input, point);
        if (fuzz_cmd->parsed()) return cmd_fuzz(trials, seed, bound);
        if (gen_cmd->parsed()) return cmd_gen(gen_n, seed, bound, output);
    } catch (const tri::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const tri::InternalError& e) {
        std::cerr << "internal invariant violated: " << e.what() << "\n";
        return kExitInternal;
    } catch (const tri::InputError& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitOk;
}
