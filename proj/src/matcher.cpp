#include "tiling/matcher.hpp"

#include <algorithm>
#include <set>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <unordered_map>

namespace tiling {

std::pair<Point, Point> placed_side(const Patch& patch, const TileSet& ts, int placement,
                                    int side) {
    const Placement& pl = patch.placements[static_cast<std::size_t>(placement)];
    const TileProto& proto = ts.at(pl.tile);
    const std::size_t n = proto.shape.size();
    const auto s = static_cast<std::size_t>(side);
    return {apply(pl.pose, proto.shape[s]), apply(pl.pose, proto.shape[(s + 1) % n])};
}

EdgeLabel effective_label(const Patch& patch, const TileSet& ts, int placement, int side) {
    const Placement& pl = patch.placements[static_cast<std::size_t>(placement)];
    const EdgeLabel& raw = ts.at(pl.tile).edges[static_cast<std::size_t>(side)];
    return pl.pose.reflect ? mirrored(raw) : raw;
}

bool edges_compatible(const EdgeLabel& a, const EdgeLabel& b, const RuleSet& rules) {
    return rules.compatible(a, b);
}

namespace {

struct SideRecord {
    EdgeRef ref;
    int v0 = 0, v1 = 0;  // welded endpoint ids
    Point p0, p1;
};

struct PairKeyHash {
    std::size_t operator()(const std::pair<int, int>& k) const {
        return std::hash<long long>{}((static_cast<long long>(k.first) << 32) ^
                                      static_cast<unsigned>(k.second));
    }
};

}  // namespace

Adjacency build_adjacency(const Patch& patch, const TileSet& ts, double grid) {
    Welder welder(grid);
    std::vector<SideRecord> sides;
    for (int i = 0; i < static_cast<int>(patch.placements.size()); ++i) {
        const TileProto& proto = ts.at(patch.placements[static_cast<std::size_t>(i)].tile);
        for (int s = 0; s < static_cast<int>(proto.shape.size()); ++s) {
            auto [a, b] = placed_side(patch, ts, i, s);
            SideRecord rec;
            rec.ref = {i, s};
            rec.v0 = welder.id_for(a);
            rec.v1 = welder.id_for(b);
            rec.p0 = a;
            rec.p1 = b;
            sides.push_back(rec);
        }
    }

    Adjacency adj;
    std::unordered_map<std::pair<int, int>, std::vector<int>, PairKeyHash> by_segment;
    for (int i = 0; i < static_cast<int>(sides.size()); ++i) {
        const SideRecord& r = sides[static_cast<std::size_t>(i)];
        by_segment[{std::min(r.v0, r.v1), std::max(r.v0, r.v1)}].push_back(i);
    }

    std::vector<int> unmatched;
    std::vector<std::pair<int, int>> segs;
    segs.reserve(by_segment.size());
    for (const auto& [seg, idx] : by_segment) segs.push_back(seg);
    std::sort(segs.begin(), segs.end());
    for (const auto& seg : segs) {
        const std::vector<int>& claim = by_segment[seg];
        if (claim.size() > 2) {
            throw TilingError("edge-conflict", "more than 2 full-edge claims on one edge key (" +
                                                   std::to_string(claim.size()) + " claims)");
        }
        if (claim.size() == 2) {
            const SideRecord& a = sides[static_cast<std::size_t>(claim[0])];
            const SideRecord& b = sides[static_cast<std::size_t>(claim[1])];
            adj.pairs.push_back({a.ref, b.ref, a.v0 == b.v0});
        } else {
            unmatched.push_back(claim[0]);
        }
    }

    // Partial contacts: unmatched sides that are collinear and overlap over a
    // positive length (child edges lying inside a longer parent edge).
    for (std::size_t ii = 0; ii < unmatched.size(); ++ii) {
        for (std::size_t jj = ii + 1; jj < unmatched.size(); ++jj) {
            const SideRecord& a = sides[static_cast<std::size_t>(unmatched[ii])];
            const SideRecord& b = sides[static_cast<std::size_t>(unmatched[jj])];
            if (a.ref.placement == b.ref.placement) continue;
            const Point da = a.p1 - a.p0;
            const double len = norm(da);
            if (len < grid) continue;
            const Point dir = da * (1.0 / len);
            if (std::abs(cross(dir, b.p0 - a.p0)) > grid ||
                std::abs(cross(dir, b.p1 - a.p0)) > grid)
                continue;
            double t0 = dot(dir, b.p0 - a.p0);
            double t1 = dot(dir, b.p1 - a.p0);
            if (t0 > t1) std::swap(t0, t1);
            const double lo = std::max(0.0, t0);
            const double hi = std::min(len, t1);
            if (hi - lo > grid) adj.partials.push_back({a.ref, b.ref, hi - lo});
        }
    }
    std::sort(adj.partials.begin(), adj.partials.end(),
              [](const PartialContact& x, const PartialContact& y) {
                  return std::tie(x.a, x.b) < std::tie(y.a, y.b);
              });

    std::set<std::pair<int, int>> in_partial;
    for (const PartialContact& pc : adj.partials) {
        in_partial.insert({pc.a.placement, pc.a.side});
        in_partial.insert({pc.b.placement, pc.b.side});
    }
    for (int idx : unmatched) {
        const EdgeRef& ref = sides[static_cast<std::size_t>(idx)].ref;
        if (!in_partial.count({ref.placement, ref.side})) adj.boundary.push_back(ref);
    }
    std::sort(adj.boundary.begin(), adj.boundary.end());
    std::sort(adj.pairs.begin(), adj.pairs.end(), [](const EdgePair& x, const EdgePair& y) {
        return std::tie(x.a, x.b) < std::tie(y.a, y.b);
    });
    return adj;
}

std::vector<OverlapPair> overlapping_pairs(const Patch& patch, const TileSet& ts) {
    const int n = static_cast<int>(patch.placements.size());
    std::vector<Polygon> polys;
    std::vector<BoundingBox> boxes;
    polys.reserve(static_cast<std::size_t>(n));
    double max_diam = kSnapGrid;
    for (const Placement& pl : patch.placements) {
        Polygon poly = ts.at(pl.tile).shape.transformed(pl.pose);
        BoundingBox box = bounding_box(poly.vertices());
        max_diam = std::max(max_diam, std::max(box.width(), box.height()));
        polys.push_back(std::move(poly));
        boxes.push_back(box);
    }

    // Uniform grid keyed by bbox cells; only same/adjacent-cell pairs are
    // candidates, which keeps deep patches near-linear.
    const double cell = max_diam;
    std::unordered_map<std::pair<int, int>, std::vector<int>, PairKeyHash> grid;
    for (int i = 0; i < n; ++i) {
        const BoundingBox& b = boxes[static_cast<std::size_t>(i)];
        const int cx = static_cast<int>(std::floor((b.min_x + b.max_x) / 2 / cell));
        const int cy = static_cast<int>(std::floor((b.min_y + b.max_y) / 2 / cell));
        grid[{cx, cy}].push_back(i);
    }
    std::vector<OverlapPair> out;
    for (const auto& [key, members] : grid) {
        for (int dx = -1; dx <= 1; ++dx) {
            for (int dy = -1; dy <= 1; ++dy) {
                auto it = grid.find({key.first + dx, key.second + dy});
                if (it == grid.end()) continue;
                for (int i : members) {
                    for (int j : it->second) {
                        if (j <= i) continue;
                        const auto ui = static_cast<std::size_t>(i);
                        const auto uj = static_cast<std::size_t>(j);
                        if (!boxes[ui].overlaps(boxes[uj], kPointTol)) continue;
                        const double area = overlap_area(polys[ui], polys[uj]);
                        if (area > kAreaTol) out.push_back({i, j, area});
                    }
                }
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const OverlapPair& x, const OverlapPair& y) {
        return std::tie(x.a, x.b) < std::tie(y.a, y.b);
    });
    return out;
}

ValidationReport validate_patch(const Patch& patch, const TileSet& ts) {
    ValidationReport report;
    for (const Placement& pl : patch.placements) {
        ts.at(pl.tile);  // placement must reference the tile set
        if (pl.pose.scale <= 0) throw TilingError("pose-scale", "placement scale must be positive");
        ++report.tile_counts[pl.tile];
    }
    const Adjacency adj = build_adjacency(patch, ts);
    for (const EdgePair& pair : adj.pairs) {
        const EdgeLabel la = effective_label(patch, ts, pair.a.placement, pair.a.side);
        const EdgeLabel lb = effective_label(patch, ts, pair.b.placement, pair.b.side);
        if (!edges_compatible(la, lb, ts.rules))
            report.edge_mismatches.push_back({pair.a, pair.b, la, lb});
    }
    report.overlaps = overlapping_pairs(patch, ts);
    return report;
}

// ---------------------------------------------------------------------------
// Patch interchange format
// ---------------------------------------------------------------------------

std::string patch_to_text(const Patch& patch) {
    std::string out = "patch v1\n";
    char buf[160];
    for (const Placement& pl : patch.placements) {
        std::snprintf(buf, sizeof buf, "place %s %.17g %.17g %d %.17g %.17g\n", pl.tile.c_str(),
                      pl.pose.scale, pl.pose.rotation_deg, pl.pose.reflect ? 1 : 0,
                      pl.pose.translation.x, pl.pose.translation.y);
        out += buf;
    }
    return out;
}

Patch patch_from_text(const std::string& text) {
    Patch patch;
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    bool saw_header = false;
    while (std::getline(in, raw)) {
        ++line_no;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        std::istringstream line(raw);
        std::string kw;
        if (!(line >> kw) || kw[0] == '#') continue;
        if (!saw_header) {
            std::string version;
            if (kw != "patch" || !(line >> version) || version != "v1")
                throw ParseError("version", line_no, 1, "expected 'patch v1' header");
            saw_header = true;
            continue;
        }
        if (kw != "place")
            throw ParseError("syntax", line_no, 1, "expected 'place', got '" + kw + "'");
        Placement pl;
        int reflect = 0;
        if (!(line >> pl.tile >> pl.pose.scale >> pl.pose.rotation_deg >> reflect >>
              pl.pose.translation.x >> pl.pose.translation.y))
            throw ParseError("syntax", line_no, 1, "malformed place line");
        if (reflect != 0 && reflect != 1)
            throw ParseError("syntax", line_no, 1, "reflect flag must be 0 or 1");
        if (pl.pose.scale <= 0) throw ParseError("range", line_no, 1, "scale must be positive");
        pl.pose.reflect = reflect == 1;
        patch.placements.push_back(std::move(pl));
    }
    if (!saw_header) throw ParseError("version", 1, 1, "missing 'patch v1' header");
    return patch;
}

std::string report_to_text(const ValidationReport& report) {
    std::string out;
    char buf[200];
    for (const EdgeMismatch& m : report.edge_mismatches) {
        std::snprintf(buf, sizeof buf, "mismatch: placement %d side %d (%s) vs placement %d side %d (%s)\n",
                      m.a.placement, m.a.side, m.label_a.str().c_str(), m.b.placement, m.b.side,
                      m.label_b.str().c_str());
        out += buf;
    }
    for (const OverlapPair& o : report.overlaps) {
        std::snprintf(buf, sizeof buf, "overlap: placements %d and %d area %.9g\n", o.a, o.b,
                      o.area);
        out += buf;
    }
    out += "tiles:";
    for (const auto& [id, count] : report.tile_counts)
        out += " " + id + "=" + std::to_string(count);
    out += "\n";
    out += "mismatches: " + std::to_string(report.edge_mismatches.size()) +
           "  overlaps: " + std::to_string(report.overlaps.size()) + "\n";
    return out;
}

}  // namespace tiling
