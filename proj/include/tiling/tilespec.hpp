#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tiling/geometry.hpp"

namespace tiling {

enum class Polarity { sym, plus, minus };

char polarity_suffix(Polarity p);

struct EdgeLabel {
    std::string name;
    Polarity polarity = Polarity::sym;

    auto operator<=>(const EdgeLabel&) const = default;
    std::string str() const { return name + polarity_suffix(polarity); }
};

// Label as presented by a mirrored placement: traversal reverses, so the
// plus/minus polarity swaps; sym is unaffected.
EdgeLabel mirrored(const EdgeLabel& label);

struct TileProto {
    std::string id;
    Polygon shape;
    std::vector<EdgeLabel> edges;  // edge i runs from vertex i to vertex i+1
    std::string motif;             // opaque identifier, empty when absent
    int symmetry = 1;              // declared rotational symmetry order
};

struct SubstChild {
    std::string child;
    Transform rel;
};

struct Substitution {
    double scale = 0.0;  // shared child scale, in (0,1)
    std::vector<SubstChild> children;
};

struct FractalAttachment {
    int edge = 0;             // parent side hosting the child
    double from = 0.0;        // fraction range of the contact along that side
    double to = 1.0;
    std::string child;
    Transform rel;            // child pose relative to the parent
};

using LabelPair = std::pair<EdgeLabel, EdgeLabel>;

struct RuleSet {
    std::set<LabelPair> compat;  // canonical pairs, defaults included
    std::vector<LabelPair> extra_pairs;
    std::map<std::string, Substitution> substitutions;
    std::map<std::string, std::vector<FractalAttachment>> attachments;
    std::set<std::string> modes;

    bool compatible(const EdgeLabel& a, const EdgeLabel& b) const;
};

LabelPair canonical_pair(const EdgeLabel& a, const EdgeLabel& b);

struct TileSet {
    std::vector<TileProto> tiles;
    RuleSet rules;

    const TileProto* find(const std::string& id) const;
    const TileProto& at(const std::string& id) const;
};

// Derives the default polarity compatibilities for every label appearing on
// the tiles and merges the extra pairs, then checks rule references.
void finalize_rules(TileSet& ts);

struct ParseError : std::runtime_error {
    ParseError(std::string c, int l, int co, const std::string& msg)
        : std::runtime_error(msg), code(std::move(c)), line(l), col(co) {}
    std::string code;
    int line;
    int col;
};

TileSet parse_tileset(const std::string& text);
std::string serialize_tileset(const TileSet& ts);

// Built-in tile sets: square-sym, square-vitruvian, square-swirl,
// square-two-adjacent, p2, p3, fractal-rect, fractal-tri.
TileSet builtin_tileset(const std::string& name);
std::vector<std::string> builtin_names();

bool structurally_equal(const TileSet& a, const TileSet& b, double tol = 1e-9);

}  // namespace tiling
