#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tiling/matcher.hpp"

namespace tiling {

struct CollisionPair {
    int a = 0, b = 0;
    double area = 0.0;
};

struct CollisionReport {
    std::vector<CollisionPair> pairs;
    std::optional<int> first_depth;  // smallest depth of any offending pair's deeper node

    bool empty() const { return pairs.empty(); }
};

struct GrowOptions {
    std::optional<double> scale = {};       // overrides every attachment scale
    long long node_budget = 100'000;
    // Per-node rotation of the internal decomposition (0,1,2 -> 0/120/240
    // degrees) for symmetry-3 tiles; indexed by node order.
    std::vector<int> swaps = {};
    std::optional<std::uint32_t> swap_seed = {};
};

// Breadth-first fractal tree: every node at depth < `depth` spawns one child
// per attachment; child pose = parent pose composed with the site transform.
// The result is tree-annotated (Patch::nodes).
Patch grow(const TileSet& ts, const std::string& root, int depth,
           const GrowOptions& opts = {});

// All node pairs with interior overlap above tolerance. Parent-child edge
// contacts have zero area and never appear.
CollisionReport detect_collisions(const TileSet& ts, const Patch& patch);

// Bisection (12 iterations) for the largest tested uniform child scale that
// stays collision-free at the given depth. Requires lo safe and hi colliding.
double max_safe_scale(const TileSet& ts, const std::string& root, int depth, double lo,
                      double hi);

// Growth with per-node swap choices (see GrowOptions::swaps / swap_seed).
Patch triangle_variant(const TileSet& ts, const std::string& root, int depth,
                       const GrowOptions& opts);

}  // namespace tiling
