#include <cmath>

#include "tiling/tilespec.hpp"

namespace tiling {

namespace {

constexpr double kPi = 3.14159265358979323846;
const double kPhi = (1.0 + std::sqrt(5.0)) / 2.0;
const double kS36 = std::sin(36.0 * kPi / 180.0);
const double kC36 = std::cos(36.0 * kPi / 180.0);
const double kS18 = std::sin(18.0 * kPi / 180.0);
const double kC18 = std::cos(18.0 * kPi / 180.0);

EdgeLabel L(const std::string& name, Polarity p) { return {name, p}; }

TileProto square_tile(const std::string& id, std::vector<EdgeLabel> edges, int symmetry) {
    return {id, Polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}), std::move(edges), "arrow", symmetry};
}

TileSet square_family(const std::string& name) {
    TileSet ts;
    if (name == "square-sym") {
        ts.tiles.push_back(square_tile("square",
                                       {L("A", Polarity::sym), L("A", Polarity::sym),
                                        L("A", Polarity::sym), L("A", Polarity::sym)},
                                       4));
        ts.rules.modes = {"translation"};
    } else if (name == "square-vitruvian") {
        ts.tiles.push_back(square_tile("square",
                                       {L("A", Polarity::plus), L("B", Polarity::plus),
                                        L("A", Polarity::minus), L("B", Polarity::minus)},
                                       1));
        ts.rules.modes = {"translation"};
    } else if (name == "square-swirl") {
        ts.tiles.push_back(square_tile("square",
                                       {L("A", Polarity::plus), L("A", Polarity::minus),
                                        L("B", Polarity::plus), L("B", Polarity::minus)},
                                       1));
        ts.rules.modes = {"swirl"};
    } else {  // square-two-adjacent
        ts.tiles.push_back(square_tile("square",
                                       {L("A", Polarity::plus), L("B", Polarity::plus),
                                        L("A", Polarity::minus), L("B", Polarity::minus)},
                                       1));
        // Each label gains a second complement on an adjacent side; this is
        // what opens exactly two arrangements per row.
        ts.rules.extra_pairs.push_back(
            canonical_pair(L("A", Polarity::plus), L("B", Polarity::plus)));
        ts.rules.extra_pairs.push_back(
            canonical_pair(L("A", Polarity::minus), L("B", Polarity::minus)));
        ts.rules.modes = {"two_adjacent", "translation"};
    }
    finalize_rules(ts);
    return ts;
}

// P2 kite/dart system. Whole tiles are listed with their apex at the origin
// and the symmetry axis on +y; the half tiles are the Robinson triangles the
// substitution operates on (side 2 is the internal seam along the axis).
TileSet p2_tileset() {
    const Point d{kPhi * kS36, kPhi * kC36};  // shared wing vertex of both halves
    const double s = 1.0 / kPhi;

    TileSet ts;
    ts.tiles.push_back({"kite",
                        Polygon({{0, 0}, d, {0, kPhi}, {-d.x, d.y}}),
                        {L("kl", Polarity::plus), L("s", Polarity::plus), L("s", Polarity::minus),
                         L("kl", Polarity::minus)},
                        "arrow",
                        1});
    ts.tiles.push_back({"dart",
                        Polygon({{0, 0}, d, {0, 1}, {-d.x, d.y}}),
                        {L("dl", Polarity::plus), L("s", Polarity::plus), L("s", Polarity::minus),
                         L("dl", Polarity::minus)},
                        "arrow",
                        1});
    ts.tiles.push_back({"half_kite",
                        Polygon({{0, 0}, d, {0, kPhi}}),
                        {L("kl", Polarity::plus), L("s", Polarity::plus), L("kx", Polarity::plus)},
                        "",
                        1});
    ts.tiles.push_back({"half_dart",
                        Polygon({{0, 0}, d, {0, 1}}),
                        {L("dl", Polarity::plus), L("s", Polarity::plus), L("dx", Polarity::plus)},
                        "",
                        1});

    Substitution hk;
    hk.scale = s;
    hk.children = {{"half_dart", {s, 144.0, true, {0, 0}}},
                   {"half_kite", {s, 288.0, true, d}},
                   {"half_kite", {s, 108.0, false, d}}};
    Substitution hd;
    hd.scale = s;
    hd.children = {{"half_kite", {s, 0.0, false, {0, 0}}},
                   {"half_dart", {s, 144.0, false, d}}};
    ts.rules.substitutions["half_kite"] = hk;
    ts.rules.substitutions["half_dart"] = hd;
    // Long edges pair head-to-head within and across the two kinds; short
    // edges are shared by the mirror-symmetric kite and dart, whose traversal
    // polarity cannot be pinned, so shorts match by name.
    ts.rules.extra_pairs.push_back(
        canonical_pair(L("dl", Polarity::plus), L("kl", Polarity::plus)));
    ts.rules.extra_pairs.push_back(
        canonical_pair(L("dl", Polarity::minus), L("kl", Polarity::minus)));
    ts.rules.extra_pairs.push_back(canonical_pair(L("s", Polarity::plus), L("s", Polarity::plus)));
    ts.rules.extra_pairs.push_back(
        canonical_pair(L("s", Polarity::minus), L("s", Polarity::minus)));
    finalize_rules(ts);
    return ts;
}

// P3 thick/thin rhombus system, unit sides. Thick axis through the 72-degree
// vertices, thin cut along the short diagonal between its 144-degree corners.
TileSet p3_tileset() {
    const Point e{kS36, kC36};    // 108-degree corner of the thick half
    const Point c{-kS18, kC18};   // one 144-degree corner of the thin half
    const double s = 1.0 / kPhi;

    TileSet ts;
    ts.tiles.push_back({"thick",
                        Polygon({{0, 0}, e, {0, kPhi}, {-e.x, e.y}}),
                        {L("w", Polarity::plus), L("w", Polarity::minus), L("w", Polarity::plus),
                         L("w", Polarity::minus)},
                        "arrow",
                        2});
    ts.tiles.push_back({"thin",
                        Polygon({{0, 0}, {kS18, kC18}, {0, 2 * kC18}, c}),
                        {L("v", Polarity::plus), L("v", Polarity::minus), L("w", Polarity::minus),
                         L("w", Polarity::plus)},
                        "arrow",
                        1});
    ts.tiles.push_back({"half_thick",
                        Polygon({{0, 0}, e, {0, kPhi}}),
                        {L("w", Polarity::plus), L("w", Polarity::minus), L("tx", Polarity::plus)},
                        "",
                        1});
    ts.tiles.push_back({"half_thin",
                        Polygon({c, {0, 0}, {kS18, kC18}}),
                        {L("w", Polarity::plus), L("v", Polarity::plus), L("nx", Polarity::plus)},
                        "",
                        1});

    Substitution ht;
    ht.scale = s;
    ht.children = {{"half_thick", {s, 144.0, false, e}},
                   {"half_thin", {s, 126.0, true, {0, 1.0 / kPhi}}},
                   {"half_thick", {s, 0.0, true, {0, kPhi}}}};
    Substitution hn;
    hn.scale = s;
    hn.children = {{"half_thick", {s, 18.0, false, {0, 0}}},
                   {"half_thin", {s, 252.0, false, c}}};
    ts.rules.substitutions["half_thick"] = ht;
    ts.rules.substitutions["half_thin"] = hn;
    // The system's one asymmetric pair: w sides may also meet v sides of the
    // opposite polarity.
    ts.rules.extra_pairs.push_back(
        canonical_pair(L("w", Polarity::plus), L("v", Polarity::minus)));
    ts.rules.extra_pairs.push_back(
        canonical_pair(L("w", Polarity::minus), L("v", Polarity::plus)));
    finalize_rules(ts);
    return ts;
}

// Unit square whose A side (bottom) re-appears at half scale on the upper
// halves of both lateral sides: the plain child turned clockwise on the
// right, the mirrored child turned counter-clockwise on the left.
TileSet fractal_rect_tileset() {
    TileSet ts;
    ts.tiles.push_back(square_tile("rect",
                                   {L("A", Polarity::plus), L("A", Polarity::minus),
                                    L("T", Polarity::sym), L("A", Polarity::minus)},
                                   1));
    ts.rules.attachments["rect"] = {
        {1, 0.5, 1.0, "rect", {0.5, 270.0, false, {1, 1}}},
        {3, 0.0, 0.5, "rect", {0.5, 270.0, true, {0, 1}}},
    };
    finalize_rules(ts);
    return ts;
}

// Equilateral tile with a three-fold interior; children hang off the upper
// portions of both legs at scale 2/3, the mirrored one on the left leg.
TileSet fractal_tri_tileset() {
    const double h = std::sqrt(3.0) / 2.0;
    const double s = 2.0 / 3.0;
    const Point apex{0.5, h};
    TileSet ts;
    ts.tiles.push_back({"tri",
                        Polygon({{0, 0}, {1, 0}, apex}),
                        {L("A", Polarity::sym), L("A", Polarity::sym), L("A", Polarity::sym)},
                        "arrow",
                        3});
    ts.rules.attachments["tri"] = {
        {1, 1.0 - s, 1.0, "tri", {s, 300.0, false, apex}},
        {2, 0.0, s, "tri", {s, 240.0, true, apex}},
    };
    finalize_rules(ts);
    return ts;
}

}  // namespace

std::vector<std::string> builtin_names() {
    return {"square-sym",  "square-vitruvian", "square-swirl", "square-two-adjacent",
            "p2",          "p3",               "fractal-rect", "fractal-tri"};
}

TileSet builtin_tileset(const std::string& name) {
    if (name == "square-sym" || name == "square-vitruvian" || name == "square-swirl" ||
        name == "square-two-adjacent")
        return square_family(name);
    if (name == "p2") return p2_tileset();
    if (name == "p3") return p3_tileset();
    if (name == "fractal-rect") return fractal_rect_tileset();
    if (name == "fractal-tri") return fractal_tri_tileset();
    throw TilingError("unknown-builtin", "unknown built-in tile set: " + name);
}

}  // namespace tiling
