#include <algorithm>
#include <cmath>
#include <set>

#include "doctest.h"
#include "tiling/penrose.hpp"

using namespace tiling;

namespace {

const double kPhi = (1.0 + std::sqrt(5.0)) / 2.0;

double hull_diameter(const Patch& patch, const TileSet& ts) {
    std::vector<Point> pts;
    for (const Placement& pl : patch.placements)
        for (const Point& p : transformed_vertices(ts.at(pl.tile).shape, pl.pose))
            pts.push_back(p);
    const std::vector<Point> hull = convex_hull(pts);
    double best = 0;
    for (std::size_t i = 0; i < hull.size(); ++i)
        for (std::size_t j = i + 1; j < hull.size(); ++j)
            best = std::max(best, distance(hull[i], hull[j]));
    return best;
}

}  // namespace

TEST_CASE("P2 geometry: kite/dart shapes and the golden area ratio") {
    const TileSet ts = p2_geometry();
    const Polygon& kite = ts.at("kite").shape;
    const Polygon& dart = ts.at("dart").shape;
    CHECK(kite.size() == 4);
    CHECK(dart.size() == 4);
    CHECK(kite.area() / dart.area() == doctest::Approx(kPhi).epsilon(1e-12));
    // side lengths alternate phi and 1
    CHECK(distance(kite[0], kite[1]) == doctest::Approx(kPhi));
    CHECK(distance(kite[1], kite[2]) == doctest::Approx(1.0));
    CHECK(distance(dart[0], dart[1]) == doctest::Approx(kPhi));
    CHECK(distance(dart[1], dart[2]) == doctest::Approx(1.0));
}

TEST_CASE("P3 geometry: rhombus area ratio is phi") {
    const TileSet ts = p3_geometry();
    const double thick = ts.at("thick").shape.area();
    const double thin = ts.at("thin").shape.area();
    CHECK(thick / thin == doctest::Approx(kPhi).epsilon(1e-12));
    const double s108 = std::sin(108.0 * 3.14159265358979323846 / 180.0);
    CHECK(thick == doctest::Approx(s108));
}

TEST_CASE("deflation of 0 steps returns the identical patch") {
    const TileSet ts = p2_geometry();
    const Patch seed = penrose_seed(ts, SeedKind::single_kite);
    const Patch same = deflate(ts, seed, 0);
    CHECK(patch_to_text(same) == patch_to_text(seed));
}

TEST_CASE("P2 counts follow the recurrence exactly (depths 1..8)") {
    const TileSet ts = p2_geometry();
    const Patch seed = penrose_seed(ts, SeedKind::single_kite);
    long long k = 1, d = 0;
    for (int depth = 1; depth <= 8; ++depth) {
        const long long k_next = 2 * k + d;
        const long long d_next = k + d;
        k = k_next;
        d = d_next;
        const Patch patch = deflate(ts, seed, depth);
        const auto counts = half_unit_counts(patch);
        CHECK(counts.at("kite") == 2 * k);
        CHECK(counts.at("dart") == 2 * d);
    }
    CHECK(k == 1597);  // Fibonacci sanity at depth 8
}

TEST_CASE("single kite at depth 3 yields 13 kites and 8 darts") {
    const TileSet ts = p2_geometry();
    const Patch patch = deflate(ts, penrose_seed(ts, SeedKind::single_kite), 3);
    const auto counts = half_unit_counts(patch);
    CHECK(counts.at("kite") == 26);
    CHECK(counts.at("dart") == 16);
    CHECK(tile_ratio(ts, patch) == doctest::Approx(13.0 / 8.0));
}

TEST_CASE("sun seed scales the single-kite recurrence by five") {
    const TileSet ts = p2_geometry();
    const Patch patch = deflate(ts, penrose_seed(ts, SeedKind::sun), 2);
    const auto counts = half_unit_counts(patch);
    CHECK(counts.at("kite") == 50);
    CHECK(counts.at("dart") == 30);
}

TEST_CASE("P3 counts follow the thick/thin recurrence") {
    const TileSet ts = p3_geometry();
    const Patch seed = penrose_seed(ts, SeedKind::single_thick);
    long long t = 1, n = 0;
    for (int depth = 1; depth <= 6; ++depth) {
        const long long t_next = 2 * t + n;
        const long long n_next = t + n;
        t = t_next;
        n = n_next;
        const auto counts = half_unit_counts(deflate(ts, seed, depth));
        CHECK(counts.at("thick") == 2 * t);
        CHECK(counts.at("thin") == 2 * n);
    }
}

TEST_CASE("tile ratio converges to phi") {
    const TileSet ts = p2_geometry();
    const Patch seed = penrose_seed(ts, SeedKind::single_kite);
    const double r8 = tile_ratio(ts, deflate(ts, seed, 8));
    CHECK(std::abs(r8 - 1.6180339887) < 0.002);
    // strictly closer every second step from depth 4 on
    std::vector<double> err;
    for (int depth = 2; depth <= 8; ++depth)
        err.push_back(std::abs(tile_ratio(ts, deflate(ts, seed, depth)) - kPhi));
    for (std::size_t i = 2; i < err.size(); ++i) CHECK(err[i] < err[i - 2]);
}

TEST_CASE("tile ratio without darts is an error") {
    const TileSet ts = p2_geometry();
    Patch kites_only;
    kites_only.placements.push_back({"kite", Transform::identity()});
    CHECK_THROWS_AS(tile_ratio(ts, kites_only), TilingError);
}

TEST_CASE("deflate rejects non-substitutable and mixed patches") {
    const TileSet ts = p2_geometry();
    Patch whole;
    whole.placements.push_back({"kite", Transform::identity()});
    CHECK_THROWS_AS(deflate(ts, whole, 1), TilingError);
    CHECK_THROWS_AS(deflate(ts, penrose_seed(ts, SeedKind::single_kite), -1), TilingError);
    // a P3 half inside a P2 tile set is unknown
    Patch mixed;
    mixed.placements.push_back({"half_thick", Transform::identity()});
    CHECK_THROWS_AS(deflate(ts, mixed, 1), TilingError);
}

TEST_CASE("every deflated patch validates clean (keystone cross-check)") {
    for (const char* set_name : {"p2", "p3"}) {
        const TileSet ts = builtin_tileset(set_name);
        const SeedKind kinds[] = {
            std::string(set_name) == "p2" ? SeedKind::sun : SeedKind::single_thick,
            std::string(set_name) == "p2" ? SeedKind::single_dart : SeedKind::single_thin};
        for (SeedKind kind : kinds) {
            for (int depth = 0; depth <= 5; ++depth) {
                const Patch patch = deflate(ts, penrose_seed(ts, kind), depth);
                const ValidationReport report = validate_patch(patch, ts);
                CAPTURE(set_name);
                CAPTURE(depth);
                CHECK(report.valid());
                // substitution output stays edge-to-edge
                CHECK(build_adjacency(patch, ts).partials.empty());
            }
        }
    }
}

TEST_CASE("linear dimension shrinks by 1/phi per step (renormalized hulls)") {
    const TileSet ts = p2_geometry();
    const Patch seed = penrose_seed(ts, SeedKind::sun);
    // per-tile pose scale is exactly phi^-depth
    for (int depth = 1; depth <= 5; ++depth) {
        const Patch patch = deflate(ts, seed, depth);
        for (const Placement& pl : patch.placements)
            CHECK(pl.pose.scale == doctest::Approx(std::pow(kPhi, -depth)).epsilon(1e-9));
    }
    // renormalizing each level to unit tile scale shrinks the hull by 1/phi
    const double h3 = hull_diameter(deflate(ts, seed, 3), ts) * std::pow(kPhi, 3);
    const double h4 = hull_diameter(deflate(ts, seed, 4), ts) * std::pow(kPhi, 4);
    CHECK(std::abs(h3 / h4 - 1.0 / kPhi) < 1e-6);
}

TEST_CASE("deflation output is deterministic and canonically ordered") {
    const TileSet ts = p2_geometry();
    const Patch a = deflate(ts, penrose_seed(ts, SeedKind::star), 4);
    const Patch b = deflate(ts, penrose_seed(ts, SeedKind::star), 4);
    CHECK(patch_to_text(a) == patch_to_text(b));
}

TEST_CASE("vertex stars: deflated sun stays within the legal star set") {
    const TileSet ts = p2_geometry();
    const std::vector<std::string> legal = legal_vertex_star_keys(ts);
    CHECK(!legal.empty());
    for (int depth = 3; depth <= 4; ++depth) {
        const Patch patch = deflate(ts, penrose_seed(ts, SeedKind::sun), depth);
        const auto stars = vertex_stars(ts, patch);
        for (const VertexStar& star : stars)
            CHECK(std::find(legal.begin(), legal.end(), star.key()) != legal.end());
    }
    // at depth 4 the classical seven interior configurations all appear
    CHECK(vertex_stars(ts, deflate(ts, penrose_seed(ts, SeedKind::sun), 4)).size() == 7);
}

TEST_CASE("vertex stars: a single tile has no interior vertex") {
    const TileSet ts = p2_geometry();
    Patch patch;
    patch.placements.push_back({"kite", Transform::identity()});
    CHECK(vertex_stars(ts, patch).empty());
}

TEST_CASE("forged gluing is flagged by both detectors") {
    const TileSet ts = p2_geometry();
    // three unit kites and one phi-scaled kite arranged around one vertex;
    // the big kite's short edges land flush on the small kites' long edges
    Patch forged;
    forged.placements.push_back({"kite", Transform::rotation(0.0)});
    forged.placements.push_back({"kite", Transform::rotation(72.0)});
    forged.placements.push_back({"kite", Transform::rotation(144.0)});
    // tail-first kite filling the remaining 144 degrees, scaled by phi so its
    // short edges land flush on the small kites' long edges
    forged.placements.push_back({"kite", {kPhi, 72.0, false, {0, 0}}});
    const Point tail = apply(forged.placements[3].pose, ts.at("kite").shape[2]);
    forged.placements[3].pose.translation = forged.placements[3].pose.translation - tail;

    const ValidationReport report = validate_patch(forged, ts);
    CHECK(report.overlaps.empty());
    CHECK(report.edge_mismatches.size() >= 1);

    const std::vector<std::string> legal = legal_vertex_star_keys(ts);
    const auto stars = vertex_stars(ts, forged);
    REQUIRE(!stars.empty());
    bool any_outside = false;
    for (const VertexStar& star : stars)
        if (std::find(legal.begin(), legal.end(), star.key()) == legal.end()) any_outside = true;
    CHECK(any_outside);
}

TEST_CASE("seed kinds parse from CLI spellings") {
    CHECK(seed_kind_from_string("single-kite") == SeedKind::single_kite);
    CHECK(seed_kind_from_string("star") == SeedKind::star);
    CHECK_THROWS_AS(seed_kind_from_string("moon"), TilingError);
}
