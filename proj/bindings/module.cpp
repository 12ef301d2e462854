#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "tiling/fractal.hpp"
#include "tiling/penrose.hpp"
#include "tiling/periodic.hpp"
#include "tiling/render.hpp"

namespace py = pybind11;
using namespace tiling;

namespace {

GridSpec make_grid(int rows, int cols, const std::string& mode,
                   std::optional<std::vector<bool>> choices, std::uint32_t seed) {
    GridSpec g;
    g.rows = rows;
    g.cols = cols;
    g.mode = grid_mode_from_string(mode);
    g.row_choices = std::move(choices);
    g.seed = seed;
    return g;
}

py::dict report_to_dict(const ValidationReport& report) {
    py::dict d;
    py::list mismatches;
    for (const EdgeMismatch& m : report.edge_mismatches)
        mismatches.append(py::make_tuple(m.a.placement, m.a.side, m.label_a.str(), m.b.placement,
                                         m.b.side, m.label_b.str()));
    py::list overlaps;
    for (const OverlapPair& o : report.overlaps)
        overlaps.append(py::make_tuple(o.a, o.b, o.area));
    d["mismatches"] = mismatches;
    d["overlaps"] = overlaps;
    d["tile_counts"] = report.tile_counts;
    d["valid"] = report.valid();
    return d;
}

py::dict stats_to_dict(const PatchStats& s) {
    py::dict d;
    d["placements"] = s.placements;
    d["counts"] = s.tile_counts;
    d["bbox"] = py::make_tuple(s.bbox.min_x, s.bbox.min_y, s.bbox.max_x, s.bbox.max_y);
    d["covered_area"] = s.covered_area;
    d["hull_area"] = s.hull_area;
    if (s.ratio) d["ratio"] = *s.ratio;
    if (s.max_depth) d["max_depth"] = *s.max_depth;
    return d;
}

}  // namespace

PYBIND11_MODULE(_tiling, m) {
    m.doc() = "edge-matched tiling engine: periodic squares, Penrose patches, fractal trees";

    py::register_exception<TilingError>(m, "TilingError");
    py::register_exception<ParseError>(m, "TileSpecError");

    py::class_<TileSet>(m, "TileSet")
        .def_property_readonly("tile_ids",
                               [](const TileSet& ts) {
                                   std::vector<std::string> ids;
                                   for (const TileProto& t : ts.tiles) ids.push_back(t.id);
                                   return ids;
                               })
        .def("serialize", &serialize_tileset)
        .def("__repr__", [](const TileSet& ts) {
            return "<TileSet with " + std::to_string(ts.tiles.size()) + " tiles>";
        });

    py::class_<Patch>(m, "Patch")
        .def("__len__", [](const Patch& p) { return p.placements.size(); })
        .def_property_readonly("placements",
                               [](const Patch& p) {
                                   py::list out;
                                   for (const Placement& pl : p.placements)
                                       out.append(py::make_tuple(
                                           pl.tile, pl.pose.scale, pl.pose.rotation_deg,
                                           pl.pose.reflect, pl.pose.translation.x,
                                           pl.pose.translation.y));
                                   return out;
                               })
        .def("to_text", &patch_to_text)
        .def("__repr__", [](const Patch& p) {
            return "<Patch with " + std::to_string(p.placements.size()) + " placements>";
        });

    m.def("builtin_names", &builtin_names);
    m.def("builtin_tileset", &builtin_tileset, py::arg("name"));
    m.def("parse_tileset", &parse_tileset, py::arg("text"));
    m.def("patch_from_text", &patch_from_text, py::arg("text"));

    m.def(
        "tessellate",
        [](const TileSet& ts, const std::string& tile, int rows, int cols,
           const std::string& mode, std::optional<std::vector<bool>> choices,
           std::uint32_t seed) {
            return tessellate(ts, tile, make_grid(rows, cols, mode, std::move(choices), seed));
        },
        py::arg("tileset"), py::arg("tile"), py::arg("rows"), py::arg("cols"),
        py::arg("mode") = "translation", py::arg("choices") = py::none(), py::arg("seed") = 0);

    m.def(
        "count_row_arrangements",
        [](const TileSet& ts, const std::string& tile, int rows, int cols) {
            return count_row_arrangements(ts, tile, rows, cols);
        },
        py::arg("tileset"), py::arg("tile"), py::arg("rows"), py::arg("cols"));

    m.def(
        "penrose",
        [](const TileSet& ts, const std::string& seed_kind, int depth) {
            return deflate(ts, penrose_seed(ts, seed_kind_from_string(seed_kind)), depth);
        },
        py::arg("tileset"), py::arg("seed_kind"), py::arg("depth"));
    m.def("tile_ratio", &tile_ratio, py::arg("tileset"), py::arg("patch"));
    m.def("half_unit_counts", &half_unit_counts, py::arg("patch"));
    m.def(
        "vertex_star_keys",
        [](const TileSet& ts, const Patch& patch) {
            std::vector<std::string> keys;
            for (const VertexStar& star : vertex_stars(ts, patch)) keys.push_back(star.key());
            return keys;
        },
        py::arg("tileset"), py::arg("patch"));
    m.def("legal_vertex_star_keys", &legal_vertex_star_keys, py::arg("tileset"));

    m.def(
        "grow",
        [](const TileSet& ts, const std::string& root, int depth, std::optional<double> scale,
           std::optional<std::vector<int>> swaps, std::optional<std::uint32_t> swap_seed) {
            GrowOptions opts;
            opts.scale = scale;
            if (swaps || swap_seed) {
                if (swaps) opts.swaps = *swaps;
                opts.swap_seed = swap_seed;
                return triangle_variant(ts, root, depth, opts);
            }
            return grow(ts, root, depth, opts);
        },
        py::arg("tileset"), py::arg("root"), py::arg("depth"), py::arg("scale") = py::none(),
        py::arg("swaps") = py::none(), py::arg("swap_seed") = py::none());
    m.def(
        "detect_collisions",
        [](const TileSet& ts, const Patch& patch) {
            const CollisionReport report = detect_collisions(ts, patch);
            py::dict d;
            py::list pairs;
            for (const CollisionPair& pr : report.pairs)
                pairs.append(py::make_tuple(pr.a, pr.b, pr.area));
            d["pairs"] = pairs;
            d["first_depth"] = report.first_depth ? py::object(py::int_(*report.first_depth))
                                                  : py::object(py::none());
            return d;
        },
        py::arg("tileset"), py::arg("patch"));
    m.def("max_safe_scale", &max_safe_scale, py::arg("tileset"), py::arg("root"),
          py::arg("depth"), py::arg("lo"), py::arg("hi"));

    m.def(
        "validate",
        [](const TileSet& ts, const Patch& patch) {
            return report_to_dict(validate_patch(patch, ts));
        },
        py::arg("tileset"), py::arg("patch"));

    m.def(
        "to_svg",
        [](const Patch& patch, const TileSet& ts, bool labels, bool collisions,
           const std::string& motif_dir) {
            Style style;
            style.show_labels = labels;
            style.show_collisions = collisions;
            style.motif_dir = motif_dir;
            return to_svg(patch, ts, style);
        },
        py::arg("patch"), py::arg("tileset"), py::arg("labels") = false,
        py::arg("collisions") = false, py::arg("motif_dir") = "");

    m.def(
        "stats",
        [](const Patch& patch, const TileSet& ts) { return stats_to_dict(stats(patch, ts)); },
        py::arg("patch"), py::arg("tileset"));
}
