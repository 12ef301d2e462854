#pragma once

#include <map>
#include <string>
#include <vector>

#include "tiling/matcher.hpp"

namespace tiling {

enum class SeedKind {
    single_kite,
    single_dart,
    sun,
    star,
    single_thick,
    single_thin,
};

SeedKind seed_kind_from_string(const std::string& s);

TileSet p2_geometry();
TileSet p3_geometry();

// Half-tile seed patches. Suns and stars sit at the origin with a vertex on
// the +x axis; single tiles have their symmetry axis on +y.
Patch penrose_seed(const TileSet& ts, SeedKind kind);

// Robinson-triangle substitution applied `steps` times, then chirality pairs
// sharing a seam are merged into whole tiles. Unmerged boundary halves stay
// as half-tile placements.
Patch deflate(const TileSet& ts, const Patch& seed, int steps);

// Whole-tile-equivalent counts: a half contributes one half unit to its base
// kind ("half_kite" counts toward "kite"). Values are in half units so they
// stay integral; divide by 2 for whole tiles.
std::map<std::string, long long> half_unit_counts(const Patch& patch);

// kite:dart (or thick:thin) whole-tile-equivalent ratio.
double tile_ratio(const TileSet& ts, const Patch& patch);

// One interior vertex configuration: the cyclic corner sequence, normalized
// up to rotation and reflection.
struct VertexStar {
    // (tile kind, interior angle in degrees) going counter-clockwise.
    std::vector<std::pair<std::string, int>> corners;
    std::string key() const;
};

std::vector<VertexStar> vertex_stars(const TileSet& ts, const Patch& patch);

// Independent oracle: every corner sequence closing to 360 degrees with
// pairwise label-compatible radiating edges. Returns normalized keys.
std::vector<std::string> legal_vertex_star_keys(const TileSet& ts);

}  // namespace tiling
