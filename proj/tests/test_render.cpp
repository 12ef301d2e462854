#include <cmath>
#include <regex>

#include "doctest.h"
#include "tiling/fractal.hpp"
#include "tiling/penrose.hpp"
#include "tiling/periodic.hpp"
#include "tiling/render.hpp"

using namespace tiling;

namespace {

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
    std::size_t count = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + needle.size()))
        ++count;
    return count;
}

}  // namespace

TEST_CASE("empty patch renders a degenerate-safe document") {
    const TileSet ts = builtin_tileset("square-sym");
    const std::string svg = to_svg(Patch{}, ts);
    CHECK(svg.find("viewBox=\"0.000000 0.000000 1.000000 1.000000\"") != std::string::npos);
    CHECK(count_occurrences(svg, "<use") == 0);
}

TEST_CASE("2x2 translation patch: four use-elements, one tile symbol") {
    const TileSet ts = builtin_tileset("square-vitruvian");
    GridSpec grid;
    grid.rows = 2;
    grid.cols = 2;
    const Patch patch = tessellate_translation(ts, "square", grid);
    const std::string svg = to_svg(patch, ts);
    CHECK(count_occurrences(svg, "xlink:href=\"#tile-square\"") == 4);
    CHECK(count_occurrences(svg, "<symbol id=\"tile-") == 1);
}

TEST_CASE("rendering is byte-identical across runs") {
    const TileSet ts = p2_geometry();
    const Patch patch = deflate(ts, penrose_seed(ts, SeedKind::sun), 3);
    Style style;
    style.fill = {{"kite", "e8d8a8"}, {"dart", "a8c0d8"}};
    CHECK(to_svg(patch, ts, style) == to_svg(patch, ts, style));
}

TEST_CASE("emitted use transforms recover the placement pose within 1e-5") {
    const TileSet ts = p2_geometry();
    const Patch patch = deflate(ts, penrose_seed(ts, SeedKind::star), 2);
    const std::string svg = to_svg(patch, ts);

    const std::regex use_re(
        "<use xlink:href=\"#tile-[^\"]*\" transform=\"matrix\\(([^)]*)\\)\"/>");
    auto begin = std::sregex_iterator(svg.begin(), svg.end(), use_re);
    std::size_t index = 0;
    for (auto it = begin; it != std::sregex_iterator(); ++it, ++index) {
        std::istringstream nums((*it)[1].str());
        double a, b, c, d, e, f;
        nums >> a >> b >> c >> d >> e >> f;
        const Transform& pose = patch.placements[index].pose;
        const double det = a * d - b * c;
        CHECK((det < 0) == pose.reflect);
        CHECK(std::hypot(a, b) == doctest::Approx(pose.scale).epsilon(1e-5));
        double rot = std::atan2(b, a) * 180.0 / 3.14159265358979323846;
        if (rot < 0) rot += 360.0;
        double want = std::fmod(pose.rotation_deg, 360.0);
        double diff = std::abs(rot - want);
        if (diff > 180.0) diff = 360.0 - diff;
        CHECK(diff < 1e-4);
        CHECK(e == doctest::Approx(pose.translation.x).epsilon(1e-5));
        CHECK(f == doctest::Approx(pose.translation.y).epsilon(1e-5));
    }
    CHECK(index == patch.placements.size());
}

TEST_CASE("style validation") {
    const TileSet ts = builtin_tileset("square-sym");
    Patch patch;
    patch.placements.push_back({"square", Transform::identity()});
    Style bad;
    bad.default_fill = "red";
    CHECK_THROWS_AS(to_svg(patch, ts, bad), TilingError);
    Style missing_motif;
    missing_motif.motif_dir = "/nonexistent";
    CHECK_THROWS_AS(to_svg(patch, ts, missing_motif), TilingError);
}

TEST_CASE("stats: penrose counts and ratio") {
    const TileSet ts = p2_geometry();
    const Patch patch = deflate(ts, penrose_seed(ts, SeedKind::single_kite), 3);
    const PatchStats s = stats(patch, ts);
    CHECK(s.tile_counts.at("kite") == doctest::Approx(13.0));
    CHECK(s.tile_counts.at("dart") == doctest::Approx(8.0));
    REQUIRE(s.ratio.has_value());
    CHECK(*s.ratio == doctest::Approx(1.625));
    CHECK(s.covered_area <= s.hull_area + 1e-9);
}

TEST_CASE("stats: translation patch covers rows*cols tile areas") {
    const TileSet ts = builtin_tileset("square-sym");
    GridSpec grid;
    grid.rows = 3;
    grid.cols = 3;
    const Patch patch = tessellate_translation(ts, "square", grid);
    const PatchStats s = stats(patch, ts);
    CHECK(s.placements == 9);
    CHECK(s.covered_area == doctest::Approx(9.0).epsilon(1e-9));
    CHECK(s.hull_area == doctest::Approx(9.0).epsilon(1e-9));
}

TEST_CASE("stats: fractal tree depth and placement count") {
    const TileSet ts = builtin_tileset("fractal-rect");
    const Patch patch = grow(ts, "rect", 3);
    const PatchStats s = stats(patch, ts);
    CHECK(s.placements == 15);
    REQUIRE(s.max_depth.has_value());
    CHECK(*s.max_depth == 3);
    CHECK(s.covered_area <= s.hull_area + 1e-9);
}

TEST_CASE("stats emit both text and JSON forms") {
    const TileSet ts = builtin_tileset("fractal-rect");
    const Patch patch = grow(ts, "rect", 2);
    const PatchStats s = stats(patch, ts);
    const std::string text = stats_to_text(s);
    CHECK(text.find("placements: 7") != std::string::npos);
    CHECK(text.find("max_depth: 2") != std::string::npos);
    const std::string json = stats_to_json(s);
    CHECK(json.find("\"placements\": 7") != std::string::npos);
}

TEST_CASE("collision highlights appear when requested") {
    const TileSet ts = builtin_tileset("fractal-tri");
    const Patch patch = grow(ts, "tri", 5);
    Style style;
    style.show_collisions = true;
    const std::string svg = to_svg(patch, ts, style);
    CHECK(svg.find("fill-opacity=\"0.45\"") != std::string::npos);
}
