#pragma once

#include <map>
#include <optional>
#include <string>

#include "tiling/matcher.hpp"

namespace tiling {

struct Style {
    double stroke_width = 0.01;
    std::map<std::string, std::string> fill;  // tile id -> 6-hex-digit RGB
    std::string default_fill = "d8d0c0";
    std::string stroke = "303030";
    bool show_labels = false;
    bool show_collisions = false;
    std::map<std::string, std::string> motif_map;  // tile id -> motif symbol id
    std::string motif_dir;  // directory of <id>.svg fragment files; empty = built-in arrow
};

// Deterministic SVG document: one symbol per tile kind, one use-element per
// placement in patch order, 6-decimal numeric formatting.
std::string to_svg(const Patch& patch, const TileSet& ts, const Style& style = {});

struct PatchStats {
    std::map<std::string, double> tile_counts;  // whole-tile equivalents
    int placements = 0;
    BoundingBox bbox;
    double covered_area = 0.0;
    double hull_area = 0.0;
    std::optional<double> ratio;      // kite:dart or thick:thin
    std::optional<int> max_depth;     // tree patches only
};

PatchStats stats(const Patch& patch, const TileSet& ts);

std::string stats_to_text(const PatchStats& s);
std::string stats_to_json(const PatchStats& s);

}  // namespace tiling
