#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tiling/matcher.hpp"

namespace tiling {

enum class GridMode { translation, swirl, two_adjacent };

struct GridSpec {
    int rows = 1;
    int cols = 1;
    GridMode mode = GridMode::translation;
    // Per-row choices for two_adjacent (length rows-1); when absent the seed
    // drives a deterministic choice sequence.
    std::optional<std::vector<bool>> row_choices;
    std::uint32_t seed = 0;
};

GridMode grid_mode_from_string(const std::string& s);

// rows x cols lattice of translated copies. The tile must be a parallelogram
// with complementary (or all-sym) opposite sides.
Patch tessellate_translation(const TileSet& ts, const std::string& tile, const GridSpec& grid);

// rows x cols blocks of a 2x2 pinwheel (rotations 0/90/180/270 about the
// block center). The block orientation is found by searching the four
// rotational placements in fixed order; errors when none validates.
Patch tessellate_swirl(const TileSet& ts, const std::string& tile, const GridSpec& grid);

// Row 0 fixed; every further row picks one of exactly two valid arrangements.
Patch tessellate_two_adjacent(const TileSet& ts, const std::string& tile, const GridSpec& grid);

Patch tessellate(const TileSet& ts, const std::string& tile, const GridSpec& grid);

// Exhaustive backtracking count of complete per-cell-orientation tilings
// above the pinned first row.
long long count_row_arrangements(const TileSet& ts, const std::string& tile, int rows, int cols,
                                 long long budget = 10'000'000);

}  // namespace tiling
