#include "tiling/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "tiling/fractal.hpp"
#include "tiling/penrose.hpp"
#include "tiling/periodic.hpp"
#include "tiling/render.hpp"

namespace tiling {

namespace {

struct OutputOptions {
    std::string out_path;
    std::string patch_out;
    std::string motif_dir;
    bool with_stats = false;
    bool labels = false;
    bool collisions = false;
};

void add_output_options(CLI::App* cmd, OutputOptions& opts) {
    cmd->add_option("--out", opts.out_path, "write the SVG artifact to this path");
    cmd->add_option("--patch-out", opts.patch_out, "also write the patch interchange file");
    cmd->add_option("--motif-dir", opts.motif_dir, "directory of motif SVG fragments");
    cmd->add_flag("--stats", opts.with_stats, "print patch statistics to stderr");
    cmd->add_flag("--labels", opts.labels, "draw edge labels");
    cmd->add_flag("--show-collisions", opts.collisions, "highlight colliding tiles");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw TilingError("io", "cannot open file: " + path);
    std::ostringstream body;
    body << in.rdbuf();
    return body.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw TilingError("io", "cannot write file: " + path);
    out << text;
}

TileSet resolve_tileset(const std::string& source) {
    for (const std::string& name : builtin_names())
        if (name == source) return builtin_tileset(name);
    return parse_tileset(read_file(source));
}

void emit(const Patch& patch, const TileSet& ts, const OutputOptions& opts, std::ostream& out,
          std::ostream& err) {
    Style style;
    style.motif_dir = opts.motif_dir;
    style.show_labels = opts.labels;
    style.show_collisions = opts.collisions;
    const std::string svg = to_svg(patch, ts, style);
    if (opts.out_path.empty())
        out << svg;
    else
        write_file(opts.out_path, svg);
    if (!opts.patch_out.empty()) write_file(opts.patch_out, patch_to_text(patch));
    if (opts.with_stats) err << stats_to_text(stats(patch, ts));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"edge-matched tiling generator: periodic squares, Penrose patches, fractal trees"};
    app.require_subcommand(1);

    // tessellate
    auto* tess = app.add_subcommand("tessellate", "periodic square tessellations");
    std::string tess_builtin, tess_file, tess_tile, tess_mode = "translation", tess_choices;
    int tess_rows = 3, tess_cols = 3;
    unsigned tess_seed = 0;
    OutputOptions tess_out;
    tess->add_option("--builtin", tess_builtin, "built-in tile set name");
    tess->add_option("--tiles", tess_file, "tile-spec file");
    tess->add_option("--tile", tess_tile, "tile id (default: first tile)");
    tess->add_option("--mode", tess_mode, "translation | swirl | two-adjacent")
        ->check(CLI::IsMember({"translation", "swirl", "two-adjacent", "two_adjacent"}));
    tess->add_option("--rows", tess_rows, "rows (blocks in swirl mode)");
    tess->add_option("--cols", tess_cols, "cols (blocks in swirl mode)");
    tess->add_option("--choices", tess_choices, "two-adjacent row choice bitstring, e.g. 010");
    tess->add_option("--seed", tess_seed, "seed for two-adjacent row choices");
    add_output_options(tess, tess_out);

    // penrose
    auto* pen = app.add_subcommand("penrose", "Penrose P2/P3 substitution patches");
    std::string pen_set = "p2", pen_seed = "sun";
    int pen_depth = 3;
    OutputOptions pen_out;
    pen->add_option("--set", pen_set, "p2 | p3");
    pen->add_option("--seed-kind", pen_seed,
                    "single-kite | single-dart | sun | star | single-thick | single-thin");
    pen->add_option("--depth", pen_depth, "number of deflation steps")->check(CLI::Range(0, 12));
    add_output_options(pen, pen_out);

    // fractal
    auto* fra = app.add_subcommand("fractal", "fractal tile trees");
    std::string fra_builtin = "fractal-rect", fra_file, fra_tile;
    int fra_depth = 4;
    double fra_scale = -1.0;
    int fra_swap_seed = -1;
    OutputOptions fra_out;
    fra->add_option("--builtin", fra_builtin, "fractal-rect | fractal-tri");
    fra->add_option("--tiles", fra_file, "tile-spec file with attachments");
    fra->add_option("--tile", fra_tile, "root tile id (default: first tile)");
    fra->add_option("--depth", fra_depth, "tree depth")->check(CLI::Range(0, 16));
    fra->add_option("--scale", fra_scale, "override the attachment scale (0..1)");
    fra->add_option("--swap-seed", fra_swap_seed,
                    "seeded per-node 120-degree swaps (symmetry-3 tiles)");
    add_output_options(fra, fra_out);

    // validate
    auto* val = app.add_subcommand("validate", "validate a patch interchange file");
    std::string val_patch, val_tiles;
    bool val_json = false;
    val->add_option("patch", val_patch, "patch file")->required();
    val->add_option("--tiles", val_tiles, "tile set (built-in name or tile-spec file)")
        ->required();
    val->add_flag("--json", val_json, "machine-readable report");

    // stats
    auto* sta = app.add_subcommand("stats", "patch statistics");
    std::string sta_patch, sta_tiles;
    bool sta_json = false;
    sta->add_option("patch", sta_patch, "patch file")->required();
    sta->add_option("--tiles", sta_tiles, "tile set (built-in name or tile-spec file)")
        ->required();
    sta->add_flag("--json", sta_json, "JSON output");

    try {
        std::vector<std::string> argv(args.rbegin(), args.rend());
        app.name("tiling");
        app.parse(argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);  // prints the right help, subcommand-aware
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "tiling: " << e.what() << "\n";
        return 2;
    }

    try {
        if (tess->parsed()) {
            if (tess_builtin.empty() == tess_file.empty())
                throw TilingError("usage", "tessellate needs exactly one of --builtin/--tiles");
            const TileSet ts =
                tess_builtin.empty() ? parse_tileset(read_file(tess_file))
                                     : builtin_tileset(tess_builtin);
            const std::string tile = tess_tile.empty() ? ts.tiles.front().id : tess_tile;
            GridSpec grid;
            grid.rows = tess_rows;
            grid.cols = tess_cols;
            grid.mode = grid_mode_from_string(tess_mode);
            grid.seed = tess_seed;
            if (!tess_choices.empty()) {
                std::vector<bool> choices;
                for (char c : tess_choices) {
                    if (c != '0' && c != '1')
                        throw TilingError("usage", "--choices must be a bitstring of 0s and 1s");
                    choices.push_back(c == '1');
                }
                grid.row_choices = choices;
            }
            emit(tessellate(ts, tile, grid), ts, tess_out, out, err);
            return 0;
        }
        if (pen->parsed()) {
            if (pen_set != "p2" && pen_set != "p3")
                throw TilingError("usage", "unknown tile set: " + pen_set);
            const TileSet ts = builtin_tileset(pen_set);
            const SeedKind kind = seed_kind_from_string(pen_seed);
            if ((pen_set == "p2") !=
                (kind == SeedKind::single_kite || kind == SeedKind::single_dart ||
                 kind == SeedKind::sun || kind == SeedKind::star))
                throw TilingError("usage", "seed kind does not belong to " + pen_set);
            const Patch patch = deflate(ts, penrose_seed(ts, kind), pen_depth);
            emit(patch, ts, pen_out, out, err);
            return 0;
        }
        if (fra->parsed()) {
            const TileSet ts = fra_file.empty() ? builtin_tileset(fra_builtin)
                                                : parse_tileset(read_file(fra_file));
            const std::string root = fra_tile.empty() ? ts.tiles.front().id : fra_tile;
            GrowOptions opts;
            if (fra_scale > 0) {
                if (fra_scale >= 1.0)
                    throw TilingError("usage", "--scale must be in (0,1)");
                opts.scale = fra_scale;
            }
            Patch patch;
            if (fra_swap_seed >= 0) {
                opts.swap_seed = static_cast<std::uint32_t>(fra_swap_seed);
                patch = triangle_variant(ts, root, fra_depth, opts);
            } else {
                patch = grow(ts, root, fra_depth, opts);
            }
            const CollisionReport report = detect_collisions(ts, patch);
            if (!report.empty())
                err << "collisions: " << report.pairs.size() << " pair(s), first depth "
                    << (report.first_depth ? *report.first_depth : 0) << "\n";
            emit(patch, ts, fra_out, out, err);
            return 0;
        }
        if (val->parsed() || sta->parsed()) {
            const bool is_validate = val->parsed();
            const TileSet ts = resolve_tileset(is_validate ? val_tiles : sta_tiles);
            const Patch patch = patch_from_text(read_file(is_validate ? val_patch : sta_patch));
            if (is_validate) {
                const ValidationReport report = validate_patch(patch, ts);
                if (val_json) {
                    out << "{\"mismatches\": " << report.edge_mismatches.size()
                        << ", \"overlaps\": " << report.overlaps.size() << "}\n";
                } else {
                    out << report_to_text(report);
                }
                return report.valid() ? 0 : 1;
            }
            const PatchStats s = stats(patch, ts);
            out << (sta_json ? stats_to_json(s) : stats_to_text(s));
            return 0;
        }
    } catch (const ParseError& e) {
        err << "tiling:" << e.line << ":" << e.col << ": error[" << e.code << "]: " << e.what()
            << "\n";
        return 2;
    } catch (const TilingError& e) {
        err << "tiling: error[" << e.code << "]: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "tiling: error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace tiling
