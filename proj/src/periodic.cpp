#include "tiling/periodic.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace tiling {

GridMode grid_mode_from_string(const std::string& s) {
    if (s == "translation") return GridMode::translation;
    if (s == "swirl") return GridMode::swirl;
    if (s == "two-adjacent" || s == "two_adjacent") return GridMode::two_adjacent;
    throw TilingError("mode", "unknown tessellation mode: " + s);
}

namespace {

// Axis-aligned square view of a tile: side length plus the map from compass
// direction (0=E 1=N 2=W 3=S) to the side index facing it.
struct SquareFrame {
    double side = 1.0;
    Point origin{};    // bbox min corner
    Point centroid{};
    int side_for_dir[4] = {0, 0, 0, 0};
};

SquareFrame square_frame(const TileProto& tile) {
    const std::size_t n = tile.shape.size();
    if (n != 4) throw TilingError("square", "tile '" + tile.id + "' is not a quadrilateral");
    SquareFrame f;
    const BoundingBox box = bounding_box(tile.shape.vertices());
    f.origin = {box.min_x, box.min_y};
    f.centroid = tile.shape.centroid();
    f.side = box.width();
    if (std::abs(box.width() - box.height()) > 1e-9)
        throw TilingError("square", "tile '" + tile.id + "' is not a square");
    bool seen[4] = {false, false, false, false};
    for (std::size_t i = 0; i < 4; ++i) {
        const Point d = tile.shape[(i + 1) % 4] - tile.shape[i];
        if (std::abs(norm(d) - f.side) > 1e-9)
            throw TilingError("square", "tile '" + tile.id + "' sides are unequal");
        const Point nrm{d.y, -d.x};  // outward for CCW
        int dir;
        if (std::abs(nrm.x) > std::abs(nrm.y))
            dir = nrm.x > 0 ? 0 : 2;
        else
            dir = nrm.y > 0 ? 1 : 3;
        if (std::abs(nrm.x) > 1e-9 && std::abs(nrm.y) > 1e-9)
            throw TilingError("square", "tile '" + tile.id + "' is not axis-aligned");
        f.side_for_dir[dir] = static_cast<int>(i);
        seen[dir] = true;
    }
    if (!(seen[0] && seen[1] && seen[2] && seen[3]))
        throw TilingError("square", "tile '" + tile.id + "' sides do not face the four axes");
    return f;
}

// Label shown in compass direction dir when the tile is rotated 90k CCW.
const EdgeLabel& facing(const TileProto& tile, const SquareFrame& f, int k, int dir) {
    const int unrotated = ((dir - k) % 4 + 4) % 4;
    return tile.edges[static_cast<std::size_t>(f.side_for_dir[unrotated])];
}

Transform cell_pose(const SquareFrame& f, int i, int j, int k) {
    const Transform spin = Transform::rotation_about(90.0 * k, f.centroid);
    return compose(Transform::translate({i * f.side, j * f.side}), spin);
}

struct TwoAdjacentTables {
    // h[k1][k2]: rot k2 may sit to the right of rot k1; v[k1][k2]: above.
    bool h[4][4];
    bool v[4][4];
};

TwoAdjacentTables adjacency_tables(const TileProto& tile, const SquareFrame& f,
                                   const RuleSet& rules) {
    TwoAdjacentTables t{};
    for (int k1 = 0; k1 < 4; ++k1) {
        for (int k2 = 0; k2 < 4; ++k2) {
            t.h[k1][k2] = rules.compatible(facing(tile, f, k1, 0), facing(tile, f, k2, 2));
            t.v[k1][k2] = rules.compatible(facing(tile, f, k1, 1), facing(tile, f, k2, 3));
        }
    }
    return t;
}

// All complete orientation rows compatible with `below` (empty for row 0
// candidates), in lexicographic order.
void enumerate_rows(const TwoAdjacentTables& t, const std::vector<int>& below, int cols,
                    std::vector<int>& row, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(row.size()) == cols) {
        out.push_back(row);
        return;
    }
    const int i = static_cast<int>(row.size());
    for (int k = 0; k < 4; ++k) {
        if (!below.empty() && !t.v[below[static_cast<std::size_t>(i)]][k]) continue;
        if (i > 0 && !t.h[row[static_cast<std::size_t>(i - 1)]][k]) continue;
        row.push_back(k);
        enumerate_rows(t, below, cols, row, out);
        row.pop_back();
    }
}

}  // namespace

Patch tessellate_translation(const TileSet& ts, const std::string& tile_id, const GridSpec& grid) {
    const TileProto& tile = ts.at(tile_id);
    const std::size_t n = tile.shape.size();
    if (n != 4)
        throw TilingError("translation", "translation mode needs a quadrilateral tile");
    const Point u = tile.shape[1] - tile.shape[0];
    const Point v = tile.shape[3] - tile.shape[0];
    const Point u2 = tile.shape[2] - tile.shape[3];
    const Point v2 = tile.shape[2] - tile.shape[1];
    if (!almost_equal(u, u2, 1e-9) || !almost_equal(v, v2, 1e-9))
        throw TilingError("translation", "tile is not a parallelogram");
    if (!ts.rules.compatible(tile.edges[0], tile.edges[2]) ||
        !ts.rules.compatible(tile.edges[1], tile.edges[3]))
        throw TilingError("translation",
                          "tile labels incompatible with pure translation "
                          "(opposite sides must be complementary)");
    Patch patch;
    for (int j = 0; j < grid.rows; ++j)
        for (int i = 0; i < grid.cols; ++i)
            patch.placements.push_back(
                {tile_id, Transform::translate(u * static_cast<double>(i) +
                                               v * static_cast<double>(j))});
    return patch;
}

Patch tessellate_swirl(const TileSet& ts, const std::string& tile_id, const GridSpec& grid) {
    const TileProto& tile = ts.at(tile_id);
    const SquareFrame f = square_frame(tile);
    const Point block_center = f.origin + Point{f.side, f.side};

    for (int k0 = 0; k0 < 4; ++k0) {
        std::vector<Transform> block;
        const Transform base = Transform::rotation_about(90.0 * k0, f.centroid);
        for (int m = 0; m < 4; ++m)
            block.push_back(compose(Transform::rotation_about(90.0 * m, block_center), base));
        // Probe a 2x2 arrangement of blocks so both block-internal and
        // block-to-block seams are exercised.
        Patch probe;
        for (int bj = 0; bj < 2; ++bj)
            for (int bi = 0; bi < 2; ++bi)
                for (const Transform& pose : block)
                    probe.placements.push_back(
                        {tile_id, compose(Transform::translate(
                                              {2 * f.side * bi, 2 * f.side * bj}),
                                          pose)});
        if (!validate_patch(probe, ts).valid()) continue;

        Patch patch;
        for (int bj = 0; bj < grid.rows; ++bj)
            for (int bi = 0; bi < grid.cols; ++bi)
                for (const Transform& pose : block)
                    patch.placements.push_back(
                        {tile_id, compose(Transform::translate(
                                              {2 * f.side * bi, 2 * f.side * bj}),
                                          pose)});
        return patch;
    }
    throw TilingError("swirl-incompatible",
                      "tile's labels do not admit a rotationally-closed 2x2 block");
}

Patch tessellate_two_adjacent(const TileSet& ts, const std::string& tile_id,
                              const GridSpec& grid) {
    const TileProto& tile = ts.at(tile_id);
    const SquareFrame f = square_frame(tile);
    const TwoAdjacentTables tables = adjacency_tables(tile, f, ts.rules);
    if (!tables.h[0][0])
        throw TilingError("two-adjacent", "tile cannot form the fixed first row");

    std::vector<bool> choices;
    if (grid.row_choices) {
        if (static_cast<int>(grid.row_choices->size()) != grid.rows - 1)
            throw TilingError("two-adjacent",
                              "row_choices must have length rows-1 = " +
                                  std::to_string(grid.rows - 1));
        choices = *grid.row_choices;
    } else {
        std::mt19937 rng(grid.seed);
        for (int r = 1; r < grid.rows; ++r) choices.push_back((rng() & 1u) != 0);
    }

    std::vector<std::vector<int>> rows_chosen;
    rows_chosen.emplace_back(static_cast<std::size_t>(grid.cols), 0);  // pinned first row
    for (int r = 1; r < grid.rows; ++r) {
        std::vector<std::vector<int>> candidates;
        std::vector<int> scratch;
        enumerate_rows(tables, rows_chosen.back(), grid.cols, scratch, candidates);
        if (candidates.size() != 2)
            throw TilingError("two-adjacent",
                              "tile not two-adjacent compatible: row admits " +
                                  std::to_string(candidates.size()) +
                                  " arrangements instead of 2");
        rows_chosen.push_back(candidates[choices[static_cast<std::size_t>(r - 1)] ? 1 : 0]);
    }

    Patch patch;
    for (int j = 0; j < grid.rows; ++j)
        for (int i = 0; i < grid.cols; ++i)
            patch.placements.push_back(
                {tile_id,
                 cell_pose(f, i, j, rows_chosen[static_cast<std::size_t>(j)]
                                               [static_cast<std::size_t>(i)])});
    return patch;
}

Patch tessellate(const TileSet& ts, const std::string& tile, const GridSpec& grid) {
    switch (grid.mode) {
        case GridMode::translation: return tessellate_translation(ts, tile, grid);
        case GridMode::swirl: return tessellate_swirl(ts, tile, grid);
        case GridMode::two_adjacent: return tessellate_two_adjacent(ts, tile, grid);
    }
    throw TilingError("mode", "unreachable");
}

long long count_row_arrangements(const TileSet& ts, const std::string& tile_id, int rows,
                                 int cols, long long budget) {
    const TileProto& tile = ts.at(tile_id);
    const SquareFrame f = square_frame(tile);
    const TwoAdjacentTables t = adjacency_tables(tile, f, ts.rules);
    if (!t.h[0][0]) throw TilingError("two-adjacent", "tile cannot form the fixed first row");
    if (rows < 1 || cols < 1) throw TilingError("range", "rows and cols must be positive");

    // Cells above the pinned first row, row-major. The count quotients whole
    // patch translation by fixing that row.
    const int total = (rows - 1) * cols;
    std::vector<int> rot(static_cast<std::size_t>(static_cast<std::size_t>(rows) *
                                                  static_cast<std::size_t>(cols)),
                         0);
    long long count = 0;
    long long expansions = 0;

    auto cell_of = [&](int idx) {  // idx over free cells
        return std::pair<int, int>{idx % cols, 1 + idx / cols};
    };
    // Iterative DFS over candidate rotations per free cell.
    std::vector<int> choice(static_cast<std::size_t>(total), -1);
    int idx = 0;
    while (idx >= 0) {
        if (idx == total) {
            ++count;
            --idx;
            continue;
        }
        auto [ci, cj] = cell_of(idx);
        int k = choice[static_cast<std::size_t>(idx)] + 1;
        bool advanced = false;
        for (; k < 4; ++k) {
            if (++expansions > budget)
                throw TilingError("budget", "search budget exceeded in count_row_arrangements");
            const int below = rot[static_cast<std::size_t>((cj - 1) * cols + ci)];
            if (!t.v[below][k]) continue;
            if (ci > 0 && !t.h[rot[static_cast<std::size_t>(cj * cols + ci - 1)]][k]) continue;
            choice[static_cast<std::size_t>(idx)] = k;
            rot[static_cast<std::size_t>(cj * cols + ci)] = k;
            ++idx;
            advanced = true;
            break;
        }
        if (!advanced) {
            choice[static_cast<std::size_t>(idx)] = -1;
            --idx;
        }
    }
    return count;
}

}  // namespace tiling
