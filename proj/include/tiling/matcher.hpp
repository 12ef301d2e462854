#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tiling/tilespec.hpp"

namespace tiling {

struct Placement {
    std::string tile;
    Transform pose;
};

// Tree annotation carried by fractal patches; parallel to placements.
struct NodeInfo {
    int depth = 0;
    int parent = -1;
};

struct Patch {
    std::vector<Placement> placements;
    std::vector<NodeInfo> nodes;  // empty, or one entry per placement

    bool tree_annotated() const {
        return !placements.empty() && nodes.size() == placements.size();
    }
};

struct EdgeRef {
    int placement = -1;
    int side = -1;
    auto operator<=>(const EdgeRef&) const = default;
};

struct EdgePair {
    EdgeRef a, b;
    bool same_direction = false;  // true when exactly one placement is mirrored
};

struct PartialContact {
    EdgeRef a, b;
    double length = 0.0;
};

// Derived adjacency of a patch: full shared edges (paired), partial
// collinear contacts, and unpaired boundary edges.
struct Adjacency {
    std::vector<EdgePair> pairs;
    std::vector<PartialContact> partials;
    std::vector<EdgeRef> boundary;
};

Adjacency build_adjacency(const Patch& patch, const TileSet& ts, double grid = kSnapGrid);

// Placed endpoints of one polygon side, in prototype traversal order.
std::pair<Point, Point> placed_side(const Patch& patch, const TileSet& ts, int placement,
                                    int side);
// Label a side presents to its neighbors (polarity mirrored for reflected poses).
EdgeLabel effective_label(const Patch& patch, const TileSet& ts, int placement, int side);

bool edges_compatible(const EdgeLabel& a, const EdgeLabel& b, const RuleSet& rules);

struct EdgeMismatch {
    EdgeRef a, b;
    EdgeLabel label_a, label_b;  // effective labels
};

struct OverlapPair {
    int a = 0, b = 0;
    double area = 0.0;
};

struct ValidationReport {
    std::vector<EdgeMismatch> edge_mismatches;
    std::vector<OverlapPair> overlaps;
    std::map<std::string, int> tile_counts;

    bool valid() const { return edge_mismatches.empty() && overlaps.empty(); }
};

ValidationReport validate_patch(const Patch& patch, const TileSet& ts);

// Pairs of placements whose interiors intersect (area above tolerance).
// Uses a uniform spatial grid so large patches stay near-linear.
std::vector<OverlapPair> overlapping_pairs(const Patch& patch, const TileSet& ts);

// Patch interchange text format:
//   patch v1
//   place <tile-id> <scale> <rot> <reflect 0|1> <tx> <ty>
std::string patch_to_text(const Patch& patch);
Patch patch_from_text(const std::string& text);

std::string report_to_text(const ValidationReport& report);

}  // namespace tiling
