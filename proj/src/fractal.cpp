#include "tiling/fractal.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace tiling {

namespace {

Patch grow_impl(const TileSet& ts, const std::string& root, int depth, const GrowOptions& opts,
                bool with_swaps) {
    if (depth < 0) throw TilingError("grow", "depth must be non-negative");
    ts.at(root);
    if (!ts.rules.attachments.count(root))
        throw TilingError("grow", "no attachments defined for tile: " + root);

    std::vector<int> swaps = opts.swaps;
    std::mt19937 rng(opts.swap_seed.value_or(0));
    auto swap_for = [&](std::size_t node) -> int {
        if (!with_swaps) return 0;
        if (node < swaps.size()) {
            if (swaps[node] < 0 || swaps[node] > 2)
                throw TilingError("swap", "swap choices must be 0, 1 or 2");
            return swaps[node];
        }
        if (opts.swap_seed) return static_cast<int>(rng() % 3);
        return 0;
    };

    Patch patch;
    patch.placements.push_back({root, Transform::identity()});
    patch.nodes.push_back({0, -1});

    std::size_t cursor = 0;
    while (cursor < patch.placements.size()) {
        const std::size_t node = cursor++;
        const NodeInfo info = patch.nodes[node];
        if (info.depth >= depth) continue;
        const Placement parent = patch.placements[node];
        const auto it = ts.rules.attachments.find(parent.tile);
        if (it == ts.rules.attachments.end())
            throw TilingError("grow", "attachment references tile without sites: " + parent.tile);

        Transform spin = Transform::identity();
        const int sw = swap_for(node);
        if (sw != 0)
            spin = Transform::rotation_about(120.0 * sw, ts.at(parent.tile).shape.centroid());

        for (const FractalAttachment& site : it->second) {
            ts.at(site.child);
            Transform rel = site.rel;
            if (opts.scale) rel.scale = *opts.scale;
            const Transform pose = compose(parent.pose, compose(spin, rel));
            if (static_cast<long long>(patch.placements.size()) >= opts.node_budget)
                throw TilingError("budget", "fractal node budget exceeded");
            patch.placements.push_back({site.child, pose});
            patch.nodes.push_back({info.depth + 1, static_cast<int>(node)});
        }
    }
    return patch;
}

}  // namespace

Patch grow(const TileSet& ts, const std::string& root, int depth, const GrowOptions& opts) {
    GrowOptions plain = opts;
    plain.swaps.clear();
    plain.swap_seed.reset();
    return grow_impl(ts, root, depth, plain, false);
}

Patch triangle_variant(const TileSet& ts, const std::string& root, int depth,
                       const GrowOptions& opts) {
    return grow_impl(ts, root, depth, opts, true);
}

CollisionReport detect_collisions(const TileSet& ts, const Patch& patch) {
    CollisionReport report;
    const std::vector<OverlapPair> overlaps = overlapping_pairs(patch, ts);
    for (const OverlapPair& o : overlaps) {
        report.pairs.push_back({o.a, o.b, o.area});
        if (patch.tree_annotated()) {
            const int deeper = std::max(patch.nodes[static_cast<std::size_t>(o.a)].depth,
                                        patch.nodes[static_cast<std::size_t>(o.b)].depth);
            if (!report.first_depth || deeper < *report.first_depth) report.first_depth = deeper;
        }
    }
    if (!report.pairs.empty() && !patch.tree_annotated()) report.first_depth = 0;
    return report;
}

double max_safe_scale(const TileSet& ts, const std::string& root, int depth, double lo,
                      double hi) {
    if (!(0.0 < lo && lo < hi && hi < 1.0))
        throw TilingError("bisect", "need 0 < lo < hi < 1");
    auto collides = [&](double s) {
        GrowOptions opts;
        opts.scale = s;
        return !detect_collisions(ts, grow(ts, root, depth, opts)).empty();
    };
    if (collides(lo)) throw TilingError("bisect", "lower bound already collides");
    if (!collides(hi)) throw TilingError("bisect", "upper bound does not collide");
    double safe = lo;
    for (int i = 0; i < 12; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (collides(mid))
            hi = mid;
        else
            lo = safe = mid;
    }
    return safe;
}

}  // namespace tiling
