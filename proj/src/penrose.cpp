#include "tiling/penrose.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace tiling {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

SeedKind seed_kind_from_string(const std::string& s) {
    if (s == "single-kite" || s == "single_kite") return SeedKind::single_kite;
    if (s == "single-dart" || s == "single_dart") return SeedKind::single_dart;
    if (s == "sun") return SeedKind::sun;
    if (s == "star") return SeedKind::star;
    if (s == "single-thick" || s == "single_thick") return SeedKind::single_thick;
    if (s == "single-thin" || s == "single_thin") return SeedKind::single_thin;
    throw TilingError("seed-kind", "unknown seed kind: " + s);
}

TileSet p2_geometry() { return builtin_tileset("p2"); }
TileSet p3_geometry() { return builtin_tileset("p3"); }

namespace {

// Both canonical halves of a whole tile whose seam lies on the +y axis.
void push_whole(Patch& patch, const std::string& half, const Transform& pose) {
    patch.placements.push_back({half, pose});
    patch.placements.push_back({half, compose(pose, Transform{1.0, 180.0, true, {0, 0}})});
}

}  // namespace

Patch penrose_seed(const TileSet& ts, SeedKind kind) {
    Patch patch;
    switch (kind) {
        case SeedKind::single_kite:
            ts.at("half_kite");
            push_whole(patch, "half_kite", Transform::identity());
            break;
        case SeedKind::single_dart:
            ts.at("half_dart");
            push_whole(patch, "half_dart", Transform::identity());
            break;
        case SeedKind::sun:
            ts.at("half_kite");
            for (int i = 0; i < 5; ++i)
                push_whole(patch, "half_kite", Transform::rotation(72.0 * i - 90.0));
            break;
        case SeedKind::star:
            ts.at("half_dart");
            for (int i = 0; i < 5; ++i)
                push_whole(patch, "half_dart", Transform::rotation(72.0 * i - 90.0));
            break;
        case SeedKind::single_thick:
            ts.at("half_thick");
            push_whole(patch, "half_thick", Transform::identity());
            break;
        case SeedKind::single_thin: {
            const TileProto& half = ts.at("half_thin");
            // Seam endpoints sit at y = cos 18; the twin mirrors across that line.
            const double c18 = half.shape[2].y;
            patch.placements.push_back({"half_thin", Transform::identity()});
            patch.placements.push_back({"half_thin", Transform{1.0, 0.0, true, {0, 2 * c18}}});
            break;
        }
    }
    return patch;
}

namespace {

bool is_half(const std::string& id) { return id.rfind("half_", 0) == 0; }

// The whole-tile vertex the half proto does not cover (the mirrored wing).
Point mirror_vertex(const TileSet& ts, const std::string& half_id) {
    const TileProto& half = ts.at(half_id);
    const TileProto& whole = ts.at(half_id.substr(5));
    for (const Point& w : whole.shape.vertices()) {
        bool covered = false;
        for (const Point& h : half.shape.vertices())
            if (almost_equal(w, h, 1e-9)) covered = true;
        if (!covered) return w;
    }
    throw TilingError("merge", "whole tile does not extend the half tile: " + half_id);
}

// Merge half pairs whose seam endpoints coincide role-for-role and whose
// bodies sit on opposite sides of the seam. Chirality is decided
// geometrically (some halves are isosceles, so the reflect flag alone does
// not determine which side of the seam a placement covers).
Patch merge_halves(const TileSet& ts, const Patch& src) {
    Welder welder;
    struct SeamKey {
        std::string tile;
        int lo = -1, hi = -1;  // welded seam endpoints, order-normalized
        bool operator==(const SeamKey&) const = default;
    };
    struct SeamHash {
        std::size_t operator()(const SeamKey& k) const {
            return std::hash<std::string>{}(k.tile) ^
                   (std::hash<long long>{}((static_cast<long long>(k.lo) << 32) ^
                                           static_cast<unsigned>(k.hi)));
        }
    };
    std::unordered_map<SeamKey, std::vector<int>, SeamHash> seams;
    std::map<std::string, Point> mirror_of;
    for (int i = 0; i < static_cast<int>(src.placements.size()); ++i) {
        const Placement& pl = src.placements[static_cast<std::size_t>(i)];
        if (!is_half(pl.tile)) continue;
        if (!mirror_of.count(pl.tile)) mirror_of[pl.tile] = mirror_vertex(ts, pl.tile);
        const TileProto& proto = ts.at(pl.tile);
        const std::size_t n = proto.shape.size();
        const int tail = welder.id_for(apply(pl.pose, proto.shape[n - 1]));
        const int apex = welder.id_for(apply(pl.pose, proto.shape[0]));
        // Unordered endpoints: isosceles halves can pair with their seam
        // roles swapped and still close a (2-fold symmetric) whole tile.
        seams[{pl.tile, std::min(tail, apex), std::max(tail, apex)}].push_back(i);
    }

    // base[i] = the member whose pose carries the merged whole tile.
    std::vector<int> partner(src.placements.size(), -1);
    std::vector<bool> is_base(src.placements.size(), false);
    for (const auto& [key, members] : seams) {
        if (members.size() != 2) continue;
        const Placement& a = src.placements[static_cast<std::size_t>(members[0])];
        const Placement& b = src.placements[static_cast<std::size_t>(members[1])];
        const Point wing_a = apply(a.pose, ts.at(a.tile).shape[1]);
        const Point wing_b = apply(b.pose, ts.at(b.tile).shape[1]);
        int base = -1;
        if (almost_equal(apply(a.pose, mirror_of[a.tile]), wing_b, kSnapGrid))
            base = 0;
        else if (almost_equal(apply(b.pose, mirror_of[b.tile]), wing_a, kSnapGrid))
            base = 1;
        if (base < 0) continue;  // same side of the seam; not a whole tile
        partner[static_cast<std::size_t>(members[0])] = members[1];
        partner[static_cast<std::size_t>(members[1])] = members[0];
        is_base[static_cast<std::size_t>(members[static_cast<std::size_t>(base)])] = true;
    }

    Patch out;
    std::vector<bool> consumed(src.placements.size(), false);
    for (int i = 0; i < static_cast<int>(src.placements.size()); ++i) {
        const auto ui = static_cast<std::size_t>(i);
        if (consumed[ui]) continue;
        const Placement& pl = src.placements[ui];
        const int tw = partner[ui];
        if (tw < 0) {
            out.placements.push_back(pl);
            continue;
        }
        consumed[static_cast<std::size_t>(tw)] = true;
        const Placement& base =
            is_base[ui] ? pl : src.placements[static_cast<std::size_t>(tw)];
        out.placements.push_back({base.tile.substr(5), base.pose});
    }
    return out;
}

}  // namespace

Patch deflate(const TileSet& ts, const Patch& seed, int steps) {
    if (steps < 0) throw TilingError("deflate", "steps must be non-negative");
    for (const Placement& pl : seed.placements) {
        if (!ts.rules.substitutions.count(pl.tile))
            throw TilingError("deflate",
                              "patch contains a tile without substitution rules: " + pl.tile +
                                  " (mixed systems or whole tiles)");
    }
    if (steps == 0) return seed;
    Patch halves = seed;
    for (int step = 0; step < steps; ++step) {
        Patch next;
        next.placements.reserve(halves.placements.size() * 3);
        for (const Placement& pl : halves.placements) {
            const Substitution& subst = ts.rules.substitutions.at(pl.tile);
            for (const SubstChild& child : subst.children)
                next.placements.push_back({child.child, compose(pl.pose, child.rel)});
        }
        halves = std::move(next);
    }
    return merge_halves(ts, halves);
}

std::map<std::string, long long> half_unit_counts(const Patch& patch) {
    std::map<std::string, long long> counts;
    for (const Placement& pl : patch.placements) {
        if (is_half(pl.tile))
            counts[pl.tile.substr(5)] += 1;
        else
            counts[pl.tile] += 2;
    }
    return counts;
}

double tile_ratio(const TileSet& ts, const Patch& patch) {
    (void)ts;
    const auto counts = half_unit_counts(patch);
    const char* pairs[2][2] = {{"kite", "dart"}, {"thick", "thin"}};
    for (const auto& pair : pairs) {
        const auto num = counts.find(pair[0]);
        const auto den = counts.find(pair[1]);
        if (num == counts.end() && den == counts.end()) continue;
        if (den == counts.end() || den->second == 0)
            throw TilingError("ratio", std::string("tile ratio undefined: no ") + pair[1] +
                                           " tiles in the patch");
        if (num == counts.end()) return 0.0;
        return static_cast<double>(num->second) / static_cast<double>(den->second);
    }
    throw TilingError("ratio", "patch has no Penrose tiles");
}

// ---------------------------------------------------------------------------
// Vertex stars
// ---------------------------------------------------------------------------

namespace {

std::string star_kind(const std::string& tile) {
    return is_half(tile) ? tile.substr(5) : tile;
}

int corner_angle_deg(const Point& prev, const Point& v, const Point& next) {
    const double a_in = std::atan2(prev.y - v.y, prev.x - v.x);
    const double a_out = std::atan2(next.y - v.y, next.x - v.x);
    double deg = (a_in - a_out) * 180.0 / kPi;
    while (deg <= 0) deg += 360.0;
    while (deg > 360.0) deg -= 360.0;
    return static_cast<int>(std::lround(deg));
}

std::string sequence_key(const std::vector<std::pair<std::string, int>>& corners) {
    const std::size_t n = corners.size();
    auto render = [&](const std::vector<std::pair<std::string, int>>& seq, std::size_t start) {
        std::string s;
        for (std::size_t i = 0; i < seq.size(); ++i) {
            const auto& [kind, angle] = seq[(start + i) % seq.size()];
            s += kind + "@" + std::to_string(angle) + "|";
        }
        return s;
    };
    const std::vector<std::pair<std::string, int>> reversed(corners.rbegin(), corners.rend());
    std::string best;
    for (std::size_t s = 0; s < n; ++s) {
        for (int which = 0; which < 2; ++which) {
            std::string candidate = render(which == 0 ? corners : reversed, s);
            if (best.empty() || candidate < best) best = std::move(candidate);
        }
    }
    return best;
}

}  // namespace

std::string VertexStar::key() const { return sequence_key(corners); }

std::vector<VertexStar> vertex_stars(const TileSet& ts, const Patch& patch) {
    Welder welder;
    struct Corner {
        std::string kind;
        int angle;
        double out_dir;  // direction of the outgoing edge ray, for CCW order
    };
    std::unordered_map<int, std::vector<Corner>> by_vertex;
    for (const Placement& pl : patch.placements) {
        const TileProto& proto = ts.at(pl.tile);
        const std::vector<Point> pts = transformed_vertices(proto.shape, pl.pose);
        const std::size_t n = pts.size();
        for (std::size_t i = 0; i < n; ++i) {
            const Point& v = pts[i];
            // Mirrored placements traverse clockwise; swap neighbors so the
            // interior stays on the conventional side.
            const Point& prev = pl.pose.reflect ? pts[(i + 1) % n] : pts[(i + n - 1) % n];
            const Point& next = pl.pose.reflect ? pts[(i + n - 1) % n] : pts[(i + 1) % n];
            Corner c;
            c.kind = star_kind(pl.tile);
            c.angle = corner_angle_deg(prev, v, next);
            c.out_dir = std::atan2(next.y - v.y, next.x - v.x);
            by_vertex[welder.id_for(v)].push_back(c);
        }
    }

    std::vector<std::string> seen;
    std::vector<VertexStar> stars;
    for (auto& [vid, corners] : by_vertex) {
        int total = 0;
        for (const Corner& c : corners) total += c.angle;
        if (std::abs(total - 360) > 0) continue;  // boundary vertex
        std::sort(corners.begin(), corners.end(),
                  [](const Corner& a, const Corner& b) { return a.out_dir < b.out_dir; });
        VertexStar star;
        for (const Corner& c : corners) star.corners.push_back({c.kind, c.angle});
        const std::string key = star.key();
        if (std::find(seen.begin(), seen.end(), key) == seen.end()) {
            seen.push_back(key);
            stars.push_back(std::move(star));
        }
    }
    std::sort(stars.begin(), stars.end(),
              [](const VertexStar& a, const VertexStar& b) { return a.key() < b.key(); });
    return stars;
}

std::vector<std::string> legal_vertex_star_keys(const TileSet& ts) {
    struct CornerType {
        std::string kind;
        int angle;
        EdgeLabel in, out;  // edge arriving at / leaving the vertex
    };
    std::vector<CornerType> types;
    for (const TileProto& tile : ts.tiles) {
        if (is_half(tile.id)) continue;
        const std::size_t n = tile.shape.size();
        for (std::size_t i = 0; i < n; ++i) {
            const Point& prev = tile.shape[(i + n - 1) % n];
            const Point& next = tile.shape[(i + 1) % n];
            CornerType c{tile.id, corner_angle_deg(prev, tile.shape[i], next),
                         tile.edges[(i + n - 1) % n], tile.edges[i]};
            types.push_back(c);
            // Mirrored copy: traversal reverses and polarity swaps.
            types.push_back({tile.id, c.angle, mirrored(c.out), mirrored(c.in)});
        }
    }

    std::vector<std::string> keys;
    std::vector<std::pair<std::string, int>> seq;
    std::vector<const CornerType*> chain;

    auto record = [&]() {
        seq.clear();
        for (const CornerType* c : chain) seq.push_back({c->kind, c->angle});
        std::string key = sequence_key(seq);
        if (std::find(keys.begin(), keys.end(), key) == keys.end()) keys.push_back(key);
    };

    // DFS over corner sequences; consecutive tiles around a vertex share the
    // radiating edge: previous corner's in-edge against next corner's out-edge.
    auto extend = [&](auto&& self, int sum) -> void {
        if (sum > 360) return;
        if (sum == 360) {
            if (ts.rules.compatible(chain.back()->in, chain.front()->out)) record();
            return;
        }
        for (const CornerType& c : types) {
            if (!ts.rules.compatible(chain.back()->in, c.out)) continue;
            chain.push_back(&c);
            self(self, sum + c.angle);
            chain.pop_back();
        }
    };
    for (const CornerType& c : types) {
        chain = {&c};
        extend(extend, c.angle);
    }
    std::sort(keys.begin(), keys.end());
    return keys;
}

}  // namespace tiling
