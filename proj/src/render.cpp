#include "tiling/render.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "tiling/fractal.hpp"
#include "tiling/penrose.hpp"

namespace tiling {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string num(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6f", v + 0.0);  // normalize -0
    return buf;
}

bool valid_hex_color(const std::string& c) {
    if (c.size() != 6) return false;
    return std::all_of(c.begin(), c.end(),
                       [](unsigned char ch) { return std::isxdigit(ch) != 0; });
}

std::string sanitize_id(const std::string& id) {
    std::string out;
    for (char c : id)
        out += (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_') ? c : '-';
    return out;
}

// Built-in placeholder motif: an arrow showing the tile's orientation.
const char* kArrowMotif =
    "<path d=\"M -0.30 0 L 0.30 0 M 0.10 0.18 L 0.30 0 L 0.10 -0.18\" "
    "fill=\"none\" stroke=\"#802020\" stroke-width=\"0.06\"/>";

std::string load_motif(const Style& style, const std::string& motif_id) {
    if (style.motif_dir.empty()) return kArrowMotif;
    const std::string path = style.motif_dir + "/" + motif_id + ".svg";
    std::ifstream in(path);
    if (!in) throw TilingError("motif", "unknown motif id '" + motif_id + "' (no " + path + ")");
    std::ostringstream body;
    body << in.rdbuf();
    return body.str();
}

std::string transform_attr(const Transform& t) {
    // matrix(a b c d e f): column-major 2x2 plus translation, y reflected
    // before rotation per the Transform contract.
    const double c = std::cos(t.rotation_deg * kPi / 180.0);
    const double s = std::sin(t.rotation_deg * kPi / 180.0);
    const double refl = t.reflect ? -1.0 : 1.0;
    const double a = t.scale * c;
    const double b = t.scale * s;
    const double cc = t.scale * -s * refl;
    const double dd = t.scale * c * refl;
    return "matrix(" + num(a) + " " + num(b) + " " + num(cc) + " " + num(dd) + " " +
           num(t.translation.x) + " " + num(t.translation.y) + ")";
}

}  // namespace

std::string to_svg(const Patch& patch, const TileSet& ts, const Style& style) {
    for (const auto& [id, color] : style.fill)
        if (!valid_hex_color(color))
            throw TilingError("style", "fill color for " + id + " must be 6 hex digits");
    if (!valid_hex_color(style.default_fill) || !valid_hex_color(style.stroke))
        throw TilingError("style", "colors must be 6 hex digits");

    BoundingBox box{0, 0, 1, 1};
    bool first = true;
    std::set<std::string> used_tiles;
    for (const Placement& pl : patch.placements) {
        used_tiles.insert(pl.tile);
        for (const Point& p : transformed_vertices(ts.at(pl.tile).shape, pl.pose)) {
            if (first) {
                box = {p.x, p.y, p.x, p.y};
                first = false;
            } else {
                box.expand(p);
            }
        }
    }
    const double pad = first ? 0.0 : 0.02 * std::max(box.width(), box.height());
    const double vx = first ? 0.0 : box.min_x - pad;
    const double vy = first ? 0.0 : -(box.max_y + pad);  // scene group flips y
    const double vw = first ? 1.0 : box.width() + 2 * pad;
    const double vh = first ? 1.0 : box.height() + 2 * pad;

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" xmlns:xlink=\"http://www.w3.org/1999/xlink\" viewBox=\"" +
           num(vx) + " " + num(vy) + " " + num(vw) + " " + num(vh) + "\">\n";
    out += "<defs>\n";

    std::set<std::string> motifs_emitted;
    for (const std::string& id : used_tiles) {
        const TileProto& tile = ts.at(id);
        auto fit = style.fill.find(id);
        const std::string color = fit != style.fill.end() ? fit->second : style.default_fill;
        out += "<symbol id=\"tile-" + sanitize_id(id) + "\" overflow=\"visible\">\n";
        out += "<polygon points=\"";
        for (std::size_t i = 0; i < tile.shape.size(); ++i) {
            if (i) out += " ";
            out += num(tile.shape[i].x) + "," + num(tile.shape[i].y);
        }
        out += "\" fill=\"#" + color + "\" stroke=\"#" + style.stroke + "\" stroke-width=\"" +
               num(style.stroke_width) + "\"/>\n";
        std::string motif_id = tile.motif;
        auto mit = style.motif_map.find(id);
        if (mit != style.motif_map.end()) motif_id = mit->second;
        if (!motif_id.empty()) {
            motifs_emitted.insert(motif_id);
            const Point c = tile.shape.centroid();
            const double r = 0.45 * std::sqrt(tile.shape.area());
            out += "<use xlink:href=\"#motif-" + sanitize_id(motif_id) + "\" transform=\"translate(" +
                   num(c.x) + " " + num(c.y) + ") scale(" + num(r) + ")\"/>\n";
        }
        if (style.show_labels) {
            for (std::size_t i = 0; i < tile.shape.size(); ++i) {
                const Point a = tile.shape[i];
                const Point b = tile.shape[(i + 1) % tile.shape.size()];
                const Point mid = (a + b) * 0.5;
                const Point inward = tile.shape.centroid() - mid;
                const Point pos = mid + inward * 0.15;
                out += "<text x=\"" + num(pos.x) + "\" y=\"" + num(pos.y) +
                       "\" font-size=\"" + num(0.12 * std::sqrt(tile.shape.area())) +
                       "\" text-anchor=\"middle\" transform=\"scale(1 -1) translate(0 " +
                       num(-2 * pos.y) + ")\">" + tile.edges[i].str() + "</text>\n";
            }
        }
        out += "</symbol>\n";
    }
    for (const std::string& motif_id : motifs_emitted) {
        out += "<symbol id=\"motif-" + sanitize_id(motif_id) + "\" overflow=\"visible\">";
        out += load_motif(style, motif_id);
        out += "</symbol>\n";
    }
    out += "</defs>\n";
    out += "<g transform=\"matrix(1 0 0 -1 0 0)\">\n";
    for (const Placement& pl : patch.placements) {
        out += "<use xlink:href=\"#tile-" + sanitize_id(pl.tile) + "\" transform=\"" +
               transform_attr(pl.pose) + "\"/>\n";
    }
    if (style.show_collisions) {
        const CollisionReport report = detect_collisions(ts, patch);
        for (const CollisionPair& pair : report.pairs) {
            for (int idx : {pair.a, pair.b}) {
                const Placement& pl = patch.placements[static_cast<std::size_t>(idx)];
                out += "<polygon points=\"";
                const auto pts = transformed_vertices(ts.at(pl.tile).shape, pl.pose);
                for (std::size_t i = 0; i < pts.size(); ++i) {
                    if (i) out += " ";
                    out += num(pts[i].x) + "," + num(pts[i].y);
                }
                out += "\" fill=\"#c03030\" fill-opacity=\"0.45\" stroke=\"none\"/>\n";
            }
        }
    }
    out += "</g>\n</svg>\n";
    return out;
}

PatchStats stats(const Patch& patch, const TileSet& ts) {
    PatchStats s;
    s.placements = static_cast<int>(patch.placements.size());
    std::vector<Point> all_pts;
    bool first = true;
    for (const Placement& pl : patch.placements) {
        const TileProto& proto = ts.at(pl.tile);
        s.covered_area += proto.shape.area() * pl.pose.scale * pl.pose.scale;
        for (const Point& p : transformed_vertices(proto.shape, pl.pose)) {
            if (first) {
                s.bbox = {p.x, p.y, p.x, p.y};
                first = false;
            } else {
                s.bbox.expand(p);
            }
            all_pts.push_back(p);
        }
    }
    for (const auto& [kind, halves] : half_unit_counts(patch))
        s.tile_counts[kind] = static_cast<double>(halves) / 2.0;
    if (all_pts.size() >= 3) {
        const std::vector<Point> hull = convex_hull(all_pts);
        if (hull.size() >= 3) s.hull_area = signed_area(hull);
    }
    const bool p2 = s.tile_counts.count("kite") && s.tile_counts.count("dart");
    const bool p3 = s.tile_counts.count("thick") && s.tile_counts.count("thin");
    if ((p2 && s.tile_counts["dart"] > 0) || (p3 && s.tile_counts["thin"] > 0))
        s.ratio = tile_ratio(ts, patch);
    if (patch.tree_annotated()) {
        int d = 0;
        for (const NodeInfo& n : patch.nodes) d = std::max(d, n.depth);
        s.max_depth = d;
    }
    return s;
}

std::string stats_to_text(const PatchStats& s) {
    std::string out;
    out += "placements: " + std::to_string(s.placements) + "\n";
    for (const auto& [kind, count] : s.tile_counts) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%g", count);
        out += "count." + kind + ": " + buf + "\n";
    }
    out += "bbox: " + num(s.bbox.min_x) + " " + num(s.bbox.min_y) + " " + num(s.bbox.max_x) +
           " " + num(s.bbox.max_y) + "\n";
    out += "covered_area: " + num(s.covered_area) + "\n";
    out += "hull_area: " + num(s.hull_area) + "\n";
    if (s.ratio) out += "ratio: " + num(*s.ratio) + "\n";
    if (s.max_depth) out += "max_depth: " + std::to_string(*s.max_depth) + "\n";
    return out;
}

std::string stats_to_json(const PatchStats& s) {
    nlohmann::ordered_json j;
    j["placements"] = s.placements;
    nlohmann::ordered_json counts = nlohmann::ordered_json::object();
    for (const auto& [kind, count] : s.tile_counts) counts[kind] = count;
    j["counts"] = counts;
    j["bbox"] = {s.bbox.min_x, s.bbox.min_y, s.bbox.max_x, s.bbox.max_y};
    j["covered_area"] = s.covered_area;
    j["hull_area"] = s.hull_area;
    if (s.ratio) j["ratio"] = *s.ratio;
    if (s.max_depth) j["max_depth"] = *s.max_depth;
    return j.dump(2) + "\n";
}

}  // namespace tiling
