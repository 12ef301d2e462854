// Acceptance suite: one test case per criterion, each printing a PASS/FAIL
// line so the run reads as a checklist.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <regex>
#include <sstream>

#include "doctest.h"
#include "tiling/cli.hpp"
#include "tiling/fractal.hpp"
#include "tiling/penrose.hpp"
#include "tiling/periodic.hpp"
#include "tiling/render.hpp"

using namespace tiling;

namespace {

const double kPhi = (1.0 + std::sqrt(5.0)) / 2.0;

void report(int criterion, const char* name, bool ok) {
    std::printf("criterion %d (%s): %s\n", criterion, name, ok ? "PASS" : "FAIL");
    CHECK_MESSAGE(ok, "criterion ", criterion, " failed: ", name);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return {};
    std::ostringstream body;
    body << in.rdbuf();
    return body.str();
}

bool patch_clean(const Patch& patch, const TileSet& ts) {
    const ValidationReport report = validate_patch(patch, ts);
    return report.edge_mismatches.empty() && report.overlaps.empty();
}

}  // namespace

TEST_CASE("criterion 1: matching-rule soundness") {
    const auto start = std::chrono::steady_clock::now();
    bool ok = true;

    // tessellate, all three modes, up to 6x6
    for (int n = 1; n <= 6; ++n) {
        for (const char* name : {"square-sym", "square-vitruvian"}) {
            const TileSet ts = builtin_tileset(name);
            GridSpec g;
            g.rows = n;
            g.cols = n;
            ok = ok && patch_clean(tessellate_translation(ts, "square", g), ts);
        }
        {
            const TileSet ts = builtin_tileset("square-swirl");
            GridSpec g;
            g.rows = (n + 1) / 2;
            g.cols = (n + 1) / 2;
            g.mode = GridMode::swirl;
            ok = ok && patch_clean(tessellate_swirl(ts, "square", g), ts);
        }
        {
            const TileSet ts = builtin_tileset("square-two-adjacent");
            GridSpec g;
            g.rows = n;
            g.cols = n;
            g.mode = GridMode::two_adjacent;
            g.seed = static_cast<std::uint32_t>(n);
            ok = ok && patch_clean(tessellate_two_adjacent(ts, "square", g), ts);
        }
    }

    // penrose, both systems, every seed, depths up to 8
    const std::pair<const char*, SeedKind> seeds[] = {
        {"p2", SeedKind::single_kite}, {"p2", SeedKind::single_dart}, {"p2", SeedKind::sun},
        {"p2", SeedKind::star},        {"p3", SeedKind::single_thick},
        {"p3", SeedKind::single_thin}};
    for (const auto& [set_name, kind] : seeds) {
        const TileSet ts = builtin_tileset(set_name);
        for (int depth = 0; depth <= 8; ++depth)
            ok = ok && patch_clean(deflate(ts, penrose_seed(ts, kind), depth), ts);
    }

    // fractal-rect at s = 1/2 up to depth 6
    {
        const TileSet ts = builtin_tileset("fractal-rect");
        for (int depth = 0; depth <= 6; ++depth)
            ok = ok && patch_clean(grow(ts, "rect", depth), ts);
    }

    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    ok = ok && seconds < 60.0;
    std::printf("  (criterion 1 runtime: %.1fs)\n", seconds);
    report(1, "matching-rule soundness", ok);
}

TEST_CASE("criterion 2: penrose count recurrence and ratio convergence") {
    bool ok = true;
    const TileSet ts = builtin_tileset("p2");
    const Patch seed = penrose_seed(ts, SeedKind::single_kite);
    long long k = 1, d = 0;
    for (int depth = 1; depth <= 8; ++depth) {
        const long long kn = 2 * k + d, dn = k + d;
        k = kn;
        d = dn;
        const auto counts = half_unit_counts(deflate(ts, seed, depth));
        ok = ok && counts.at("kite") == 2 * k && counts.at("dart") == 2 * d;
    }
    const double ratio = tile_ratio(ts, deflate(ts, seed, 8));
    ok = ok && std::abs(ratio - 1.6180339887) < 0.002;
    report(2, "penrose counts and ratio", ok);
}

TEST_CASE("criterion 3: vertex legality and forged gluing detection") {
    bool ok = true;
    const TileSet ts = builtin_tileset("p2");
    const std::vector<std::string> legal = legal_vertex_star_keys(ts);
    const Patch sun4 = deflate(ts, penrose_seed(ts, SeedKind::sun), 4);
    for (const VertexStar& star : vertex_stars(ts, sun4))
        ok = ok && std::find(legal.begin(), legal.end(), star.key()) != legal.end();

    Patch forged;
    forged.placements.push_back({"kite", Transform::rotation(0.0)});
    forged.placements.push_back({"kite", Transform::rotation(72.0)});
    forged.placements.push_back({"kite", Transform::rotation(144.0)});
    forged.placements.push_back({"kite", {kPhi, 72.0, false, {0, 0}}});
    const Point tail = apply(forged.placements[3].pose, ts.at("kite").shape[2]);
    forged.placements[3].pose.translation = forged.placements[3].pose.translation - tail;

    const ValidationReport rep = validate_patch(forged, ts);
    ok = ok && !rep.edge_mismatches.empty();
    bool outside = false;
    for (const VertexStar& star : vertex_stars(ts, forged))
        if (std::find(legal.begin(), legal.end(), star.key()) == legal.end()) outside = true;
    ok = ok && outside;
    report(3, "vertex legality, both detectors agree on the forgery", ok);
}

TEST_CASE("criterion 4: two-adjacent row freedom is 2^(rows-1)") {
    bool ok = true;
    const TileSet ts = builtin_tileset("square-two-adjacent");
    long long expected = 1;
    for (int rows = 1; rows <= 5; ++rows) {
        ok = ok && count_row_arrangements(ts, "square", rows, 4) == expected;
        expected *= 2;
    }
    report(4, "row-arrangement freedom", ok);
}

TEST_CASE("criterion 5: fractal non-intersection and collision onset") {
    bool ok = true;
    const TileSet rect = builtin_tileset("fractal-rect");
    ok = ok && detect_collisions(rect, grow(rect, "rect", 6)).empty();

    const TileSet tri = builtin_tileset("fractal-tri");
    const CollisionReport report5 = detect_collisions(tri, grow(tri, "tri", 8));
    ok = ok && !report5.empty() && report5.first_depth.has_value() &&
         *report5.first_depth <= 8;
    report(5, "fractal branches: rect clean at 1/2, tri collides at 2/3", ok);
}

TEST_CASE("criterion 6: geometry kernel randomized properties") {
    bool ok = true;
    std::mt19937 rng(20260809);
    std::uniform_real_distribution<double> scale(0.1, 10.0);
    std::uniform_real_distribution<double> angle(0.0, 360.0);
    std::uniform_real_distribution<double> shift(-10.0, 10.0);
    auto random_transform = [&]() {
        return Transform{scale(rng), angle(rng), (rng() & 1) != 0, {shift(rng), shift(rng)}};
    };
    auto close = [](const Point& a, const Point& b) {
        const double m = std::max({1.0, std::abs(a.x), std::abs(a.y)});
        return std::abs(a.x - b.x) <= 1e-9 * m && std::abs(a.y - b.y) <= 1e-9 * m;
    };
    const Polygon tri({{0, 0}, {1.5, 0}, {0.4, 1.1}});
    std::uniform_real_distribution<double> nudge(-1.2, 1.2);
    for (int i = 0; i < 1000; ++i) {
        const Transform a = random_transform(), b = random_transform(), c = random_transform();
        const Point p{shift(rng), shift(rng)};
        ok = ok && close(apply(compose(compose(a, b), c), p), apply(compose(a, compose(b, c)), p));
        const double area = tri.transformed(a).area();
        ok = ok && std::abs(area - a.scale * a.scale * tri.area()) <=
                       1e-9 * std::max(1.0, area);
        const Polygon other =
            tri.transformed(Transform::translate({nudge(rng), nudge(rng)}));
        ok = ok && std::abs(overlap_area(tri, other) - overlap_area(other, tri)) <= 1e-9;
    }
    const Polygon square({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    ok = ok && overlap_area(square, square) == doctest::Approx(1.0);
    report(6, "geometry kernel properties (1000 cases)", ok);
}

TEST_CASE("criterion 7: determinism and golden files") {
    bool ok = true;
    const std::vector<std::vector<std::string>> fixtures = {
        {"tessellate", "--builtin", "square-swirl", "--mode", "swirl", "--rows", "2", "--cols",
         "2"},
        {"penrose", "--set", "p2", "--seed-kind", "sun", "--depth", "3"},
        {"fractal", "--builtin", "fractal-rect", "--depth", "4"},
    };
    const char* golden_names[] = {"swirl_2x2.svg", "p2_sun_depth3.svg", "rect_depth4.svg"};
    for (std::size_t i = 0; i < fixtures.size(); ++i) {
        std::ostringstream out1, err1, out2, err2;
        const int c1 = run_cli(fixtures[i], out1, err1);
        const int c2 = run_cli(fixtures[i], out2, err2);
        ok = ok && c1 == 0 && c2 == 0 && out1.str() == out2.str();
        const std::string golden =
            read_file(std::string(TILING_TEST_DIR) + "/golden/" + golden_names[i]);
        if (golden.empty() || golden != out1.str()) {
            std::printf("  golden mismatch: %s\n", golden_names[i]);
            ok = false;
        }
    }

    // transform round-trip from the emitted document
    const TileSet ts = builtin_tileset("p2");
    const Patch patch = deflate(ts, penrose_seed(ts, SeedKind::sun), 3);
    const std::string svg = to_svg(patch, ts);
    const std::regex use_re(
        "<use xlink:href=\"#tile-[^\"]*\" transform=\"matrix\\(([^)]*)\\)\"/>");
    std::size_t index = 0;
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), use_re);
         it != std::sregex_iterator(); ++it, ++index) {
        std::istringstream nums((*it)[1].str());
        double a, b, c, d, e, f;
        nums >> a >> b >> c >> d >> e >> f;
        const Transform& pose = patch.placements[index].pose;
        ok = ok && std::abs(std::hypot(a, b) - pose.scale) < 1e-5;
        ok = ok && std::abs(e - pose.translation.x) < 1e-5 &&
             std::abs(f - pose.translation.y) < 1e-5;
        ok = ok && ((a * d - b * c < 0) == pose.reflect);
    }
    ok = ok && index == patch.placements.size();
    report(7, "byte-identical artifacts and pose round-trip", ok);
}

TEST_CASE("criterion 8: parser corpus") {
    bool ok = true;
    const std::pair<const char*, const char*> corpus[] = {
        {"valid_square.tspec", ""},
        {"valid_full.tspec", ""},
        {"valid_vitruvian.tspec", ""},
        {"bad_version.tspec", "version"},
        {"bad_directive.tspec", "syntax"},
        {"bad_number.tspec", "number"},
        {"bad_edge_count.tspec", "edge-count"},
        {"bad_symmetry_shape.tspec", "symmetry-shape"},
        {"bad_symmetry_labels.tspec", "symmetry-labels"},
        {"bad_duplicate_id.tspec", "duplicate-id"},
        {"bad_unknown_subst_child.tspec", "unknown-id"},
        {"bad_subst_scale.tspec", "subst-scale"},
        {"bad_orientation.tspec", "polygon-orientation"},
        {"bad_self_intersect.tspec", "polygon-simple"},
        {"bad_unknown_label.tspec", "unknown-label"},
        {"bad_unterminated.tspec", "syntax"},
        {"bad_attach_range.tspec", "range"},
    };
    int count = 0;
    for (const auto& [file, expected_code] : corpus) {
        ++count;
        const std::string text = read_file(std::string(TILING_TEST_DIR) + "/fixtures/" + file);
        if (text.empty()) {
            ok = false;
            continue;
        }
        try {
            const TileSet ts = parse_tileset(text);
            ok = ok && std::string(expected_code).empty();
            ok = ok && structurally_equal(ts, parse_tileset(serialize_tileset(ts)));
        } catch (const ParseError& e) {
            ok = ok && e.code == expected_code;
        }
    }
    ok = ok && count >= 12;
    report(8, "parser corpus and round-trip identity", ok);
}
