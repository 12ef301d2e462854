#include "tiling/tilespec.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace tiling {

char polarity_suffix(Polarity p) {
    switch (p) {
        case Polarity::sym: return '~';
        case Polarity::plus: return '+';
        case Polarity::minus: return '-';
    }
    return '?';
}

EdgeLabel mirrored(const EdgeLabel& label) {
    EdgeLabel m = label;
    if (m.polarity == Polarity::plus)
        m.polarity = Polarity::minus;
    else if (m.polarity == Polarity::minus)
        m.polarity = Polarity::plus;
    return m;
}

LabelPair canonical_pair(const EdgeLabel& a, const EdgeLabel& b) {
    return a <= b ? LabelPair{a, b} : LabelPair{b, a};
}

bool RuleSet::compatible(const EdgeLabel& a, const EdgeLabel& b) const {
    return compat.count(canonical_pair(a, b)) > 0;
}

const TileProto* TileSet::find(const std::string& id) const {
    for (const TileProto& t : tiles)
        if (t.id == id) return &t;
    return nullptr;
}

const TileProto& TileSet::at(const std::string& id) const {
    const TileProto* t = find(id);
    if (!t) throw TilingError("unknown-tile", "unknown tile id: " + id);
    return *t;
}

namespace {

void check_tile(const TileProto& tile) {
    if (tile.edges.size() != tile.shape.size())
        throw ParseError("edge-count", 0, 0,
                         "tile '" + tile.id + "': edge list length " +
                             std::to_string(tile.edges.size()) + " != vertex count " +
                             std::to_string(tile.shape.size()));
    const int k = tile.symmetry;
    if (k < 1 || k > 4)
        throw ParseError("symmetry-order", 0, 0, "tile '" + tile.id + "': symmetry must be 1..4");
    if (k == 1) return;
    const std::size_t n = tile.shape.size();
    if (n % static_cast<std::size_t>(k) != 0)
        throw ParseError("symmetry-shape", 0, 0,
                         "tile '" + tile.id + "': vertex count not divisible by symmetry order");
    const std::size_t shift = n / static_cast<std::size_t>(k);
    const Point c = tile.shape.centroid();
    const Transform rot = Transform::rotation_about(360.0 / k, c);
    for (std::size_t i = 0; i < n; ++i) {
        const Point expected = tile.shape[(i + shift) % n];
        if (!almost_equal(apply(rot, tile.shape[i]), expected, 1e-6))
            throw ParseError("symmetry-shape", 0, 0,
                             "tile '" + tile.id + "': polygon not invariant under rotation by " +
                                 std::to_string(360.0 / k) + " degrees");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (tile.edges[i] != tile.edges[(i + shift) % n])
            throw ParseError("symmetry-labels", 0, 0,
                             "tile '" + tile.id +
                                 "': label sequence not invariant under cyclic shift by " +
                                 std::to_string(shift));
    }
}

}  // namespace

void finalize_rules(TileSet& ts) {
    std::set<std::string> ids;
    std::set<EdgeLabel> labels;
    for (const TileProto& t : ts.tiles) {
        if (!ids.insert(t.id).second)
            throw ParseError("duplicate-id", 0, 0, "duplicate tile id: " + t.id);
        check_tile(t);
        for (const EdgeLabel& l : t.edges) labels.insert(l);
    }
    RuleSet& r = ts.rules;
    r.compat.clear();
    for (const EdgeLabel& l : labels) {
        if (l.polarity == Polarity::sym) {
            r.compat.insert(canonical_pair(l, l));
        } else {
            // Mirrored placements present the opposite polarity even when no
            // tile carries it literally, so the default pair always exists.
            r.compat.insert(canonical_pair(l, mirrored(l)));
        }
    }
    for (const LabelPair& p : r.extra_pairs) {
        if (!labels.count(p.first))
            throw ParseError("unknown-label", 0, 0, "rule references unused label " + p.first.str());
        if (!labels.count(p.second))
            throw ParseError("unknown-label", 0, 0,
                             "rule references unused label " + p.second.str());
        r.compat.insert(canonical_pair(p.first, p.second));
    }
    for (const auto& [parent, subst] : r.substitutions) {
        if (!ids.count(parent))
            throw ParseError("unknown-id", 0, 0, "substitution parent not in tile set: " + parent);
        if (subst.scale <= 0.0 || subst.scale >= 1.0)
            throw ParseError("subst-scale", 0, 0,
                             "substitution scale for " + parent + " must be in (0,1)");
        for (const SubstChild& c : subst.children) {
            if (!ids.count(c.child))
                throw ParseError("unknown-id", 0, 0,
                                 "substitution child not in tile set: " + c.child);
            if (std::abs(c.rel.scale - subst.scale) > 1e-9)
                throw ParseError("subst-scale", 0, 0,
                                 "substitution children of " + parent +
                                     " must share one scale factor");
        }
    }
    for (const auto& [parent, sites] : r.attachments) {
        if (!ids.count(parent))
            throw ParseError("unknown-id", 0, 0, "attachment parent not in tile set: " + parent);
        const TileProto& pt = ts.at(parent);
        for (const FractalAttachment& a : sites) {
            if (!ids.count(a.child))
                throw ParseError("unknown-id", 0, 0, "attachment child not in tile set: " + a.child);
            if (a.edge < 0 || static_cast<std::size_t>(a.edge) >= pt.shape.size())
                throw ParseError("range", 0, 0, "attachment edge index out of range on " + parent);
            if (!(a.from >= -1e-12 && a.to <= 1.0 + 1e-12 && a.from < a.to))
                throw ParseError("range", 0, 0, "attachment fraction range must be within [0,1]");
            if (a.rel.scale <= 0.0 || a.rel.scale >= 1.0)
                throw ParseError("range", 0, 0, "attachment scale must be in (0,1)");
        }
    }
}

// ---------------------------------------------------------------------------
// Parser: line-oriented recursive descent over a token stream per line.
// ---------------------------------------------------------------------------

namespace {

struct Cursor {
    const std::string& line;
    int line_no;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    }
    bool at_end() {
        skip_ws();
        return pos >= line.size() || line[pos] == '#';
    }
    int col() const { return static_cast<int>(pos) + 1; }
    std::string token() {
        skip_ws();
        if (at_end()) throw ParseError("syntax", line_no, col(), "unexpected end of line");
        const std::size_t start = pos;
        while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t' && line[pos] != '#') ++pos;
        return line.substr(start, pos - start);
    }
    double number() {
        skip_ws();
        const int c = col();
        const std::string tok = token();
        try {
            std::size_t used = 0;
            const double v = std::stod(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            return v;
        } catch (const std::exception&) {
            throw ParseError("number", line_no, c, "expected a number, got '" + tok + "'");
        }
    }
    int integer() {
        const double v = number();
        if (v != std::floor(v))
            throw ParseError("number", line_no, col(), "expected an integer");
        return static_cast<int>(v);
    }
    void expect(const std::string& word) {
        const int c = col();
        const std::string tok = token();
        if (tok != word)
            throw ParseError("syntax", line_no, c, "expected '" + word + "', got '" + tok + "'");
    }
};

EdgeLabel parse_label(const std::string& tok, int line, int col) {
    if (tok.size() < 2)
        throw ParseError("syntax", line, col, "edge label needs a polarity suffix (~ + -)");
    const char suffix = tok.back();
    EdgeLabel l;
    l.name = tok.substr(0, tok.size() - 1);
    switch (suffix) {
        case '~': l.polarity = Polarity::sym; break;
        case '+': l.polarity = Polarity::plus; break;
        case '-': l.polarity = Polarity::minus; break;
        default:
            throw ParseError("syntax", line, col, "unknown polarity suffix '" +
                                                      std::string(1, suffix) + "'");
    }
    return l;
}

// Reads the optional "scale s rot d [reflect] at x y" transform tail.
Transform parse_transform(Cursor& cur) {
    Transform t;
    cur.expect("scale");
    t.scale = cur.number();
    cur.expect("rot");
    t.rotation_deg = cur.number();
    cur.skip_ws();
    if (!cur.at_end()) {
        const std::size_t save = cur.pos;
        const std::string tok = cur.token();
        if (tok == "reflect")
            t.reflect = true;
        else
            cur.pos = save;
    }
    cur.expect("at");
    t.translation.x = cur.number();
    t.translation.y = cur.number();
    return t;
}

}  // namespace

TileSet parse_tileset(const std::string& text) {
    TileSet ts;
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;

    enum class Section { top, tile, subst, attach };
    Section section = Section::top;
    std::optional<TileProto> tile;
    std::vector<Point> tile_verts;
    std::string subst_parent;
    Substitution subst;
    std::string attach_parent;
    std::vector<FractalAttachment> attach_sites;

    bool saw_header = false;

    auto flush_tile = [&](int l) {
        if (tile_verts.size() < 3)
            throw ParseError("syntax", l, 1, "tile '" + tile->id + "' needs at least 3 vertices");
        try {
            tile->shape = Polygon(tile_verts);
        } catch (const TilingError& e) {
            throw ParseError(e.code, l, 1, std::string(e.what()) + " in tile '" + tile->id + "'");
        }
        ts.tiles.push_back(std::move(*tile));
        tile.reset();
        tile_verts.clear();
    };

    while (std::getline(in, raw)) {
        ++line_no;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        Cursor cur{raw, line_no};
        if (cur.at_end()) continue;
        if (!saw_header) {
            cur.expect("tileset");
            const int c = cur.col();
            if (cur.token() != "v1")
                throw ParseError("version", line_no, c, "unsupported tileset version");
            saw_header = true;
            continue;
        }
        const int kw_col = cur.col();
        const std::string kw = cur.token();
        switch (section) {
            case Section::top: {
                if (kw == "tile") {
                    tile = TileProto{"", Polygon({{0, 0}, {1, 0}, {0, 1}}), {}, "", 1};
                    tile->id = cur.token();
                    while (!cur.at_end()) {
                        const std::string opt = cur.token();
                        if (opt == "symmetry")
                            tile->symmetry = cur.integer();
                        else if (opt == "motif")
                            tile->motif = cur.token();
                        else
                            throw ParseError("syntax", line_no, kw_col,
                                             "unknown tile option '" + opt + "'");
                    }
                    section = Section::tile;
                } else if (kw == "rule") {
                    const int c1 = cur.col();
                    const std::string a = cur.token();
                    const int c2 = cur.col();
                    const std::string b = cur.token();
                    ts.rules.extra_pairs.push_back(
                        canonical_pair(parse_label(a, line_no, c1), parse_label(b, line_no, c2)));
                } else if (kw == "mode") {
                    ts.rules.modes.insert(cur.token());
                } else if (kw == "subst") {
                    subst_parent = cur.token();
                    subst = Substitution{};
                    cur.expect("scale");
                    subst.scale = cur.number();
                    section = Section::subst;
                } else if (kw == "attach") {
                    attach_parent = cur.token();
                    attach_sites.clear();
                    section = Section::attach;
                } else {
                    throw ParseError("syntax", line_no, kw_col, "unknown directive '" + kw + "'");
                }
                break;
            }
            case Section::tile: {
                if (kw == "vertex") {
                    const double x = cur.number();
                    const double y = cur.number();
                    tile_verts.push_back({x, y});
                } else if (kw == "edges") {
                    while (!cur.at_end()) {
                        const int c = cur.col();
                        tile->edges.push_back(parse_label(cur.token(), line_no, c));
                    }
                } else if (kw == "end") {
                    flush_tile(line_no);
                    section = Section::top;
                } else {
                    throw ParseError("syntax", line_no, kw_col,
                                     "unknown tile directive '" + kw + "'");
                }
                break;
            }
            case Section::subst: {
                if (kw == "child") {
                    SubstChild c;
                    c.child = cur.token();
                    c.rel = parse_transform(cur);
                    subst.children.push_back(std::move(c));
                } else if (kw == "end") {
                    ts.rules.substitutions[subst_parent] = std::move(subst);
                    section = Section::top;
                } else {
                    throw ParseError("syntax", line_no, kw_col,
                                     "unknown subst directive '" + kw + "'");
                }
                break;
            }
            case Section::attach: {
                if (kw == "site") {
                    FractalAttachment a;
                    cur.expect("edge");
                    a.edge = cur.integer();
                    cur.expect("from");
                    a.from = cur.number();
                    cur.expect("to");
                    a.to = cur.number();
                    cur.expect("child");
                    a.child = cur.token();
                    a.rel = parse_transform(cur);
                    attach_sites.push_back(std::move(a));
                } else if (kw == "end") {
                    ts.rules.attachments[attach_parent] = std::move(attach_sites);
                    section = Section::top;
                } else {
                    throw ParseError("syntax", line_no, kw_col,
                                     "unknown attach directive '" + kw + "'");
                }
                break;
            }
        }
    }
    if (!saw_header) throw ParseError("version", 1, 1, "missing 'tileset v1' header");
    if (section != Section::top)
        throw ParseError("syntax", line_no, 1, "unterminated section (missing 'end')");
    finalize_rules(ts);
    return ts;
}

namespace {

std::string fmt_num(double v) {
    if (v == std::floor(v) && std::abs(v) < 1e15) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.0f", v);
        return buf;
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_transform(std::string& out, const Transform& t) {
    out += "scale " + fmt_num(t.scale) + " rot " + fmt_num(t.rotation_deg);
    if (t.reflect) out += " reflect";
    out += " at " + fmt_num(t.translation.x) + " " + fmt_num(t.translation.y);
}

}  // namespace

std::string serialize_tileset(const TileSet& ts) {
    std::string out = "tileset v1\n";
    for (const TileProto& t : ts.tiles) {
        out += "\ntile " + t.id;
        if (t.symmetry != 1) out += " symmetry " + std::to_string(t.symmetry);
        if (!t.motif.empty()) out += " motif " + t.motif;
        out += "\n";
        for (const Point& v : t.shape.vertices())
            out += "  vertex " + fmt_num(v.x) + " " + fmt_num(v.y) + "\n";
        out += "  edges";
        for (const EdgeLabel& e : t.edges) out += " " + e.str();
        out += "\nend\n";
    }
    for (const LabelPair& p : ts.rules.extra_pairs)
        out += "rule " + p.first.str() + " " + p.second.str() + "\n";
    for (const std::string& m : ts.rules.modes) out += "mode " + m + "\n";
    for (const auto& [parent, subst] : ts.rules.substitutions) {
        out += "subst " + parent + " scale " + fmt_num(subst.scale) + "\n";
        for (const SubstChild& c : subst.children) {
            out += "  child " + c.child + " ";
            write_transform(out, c.rel);
            out += "\n";
        }
        out += "end\n";
    }
    for (const auto& [parent, sites] : ts.rules.attachments) {
        out += "attach " + parent + "\n";
        for (const FractalAttachment& a : sites) {
            out += "  site edge " + std::to_string(a.edge) + " from " + fmt_num(a.from) + " to " +
                   fmt_num(a.to) + " child " + a.child + " ";
            write_transform(out, a.rel);
            out += "\n";
        }
        out += "end\n";
    }
    return out;
}

bool structurally_equal(const TileSet& a, const TileSet& b, double tol) {
    if (a.tiles.size() != b.tiles.size()) return false;
    for (std::size_t i = 0; i < a.tiles.size(); ++i) {
        const TileProto& x = a.tiles[i];
        const TileProto& y = b.tiles[i];
        if (x.id != y.id || x.motif != y.motif || x.symmetry != y.symmetry) return false;
        if (x.edges != y.edges || x.shape.size() != y.shape.size()) return false;
        for (std::size_t v = 0; v < x.shape.size(); ++v)
            if (!almost_equal(x.shape[v], y.shape[v], tol)) return false;
    }
    if (a.rules.compat != b.rules.compat || a.rules.modes != b.rules.modes) return false;
    if (a.rules.substitutions.size() != b.rules.substitutions.size()) return false;
    for (const auto& [id, sa] : a.rules.substitutions) {
        auto it = b.rules.substitutions.find(id);
        if (it == b.rules.substitutions.end()) return false;
        const Substitution& sb = it->second;
        if (std::abs(sa.scale - sb.scale) > tol || sa.children.size() != sb.children.size())
            return false;
        for (std::size_t i = 0; i < sa.children.size(); ++i)
            if (sa.children[i].child != sb.children[i].child ||
                !almost_equal(sa.children[i].rel, sb.children[i].rel, tol))
                return false;
    }
    if (a.rules.attachments.size() != b.rules.attachments.size()) return false;
    for (const auto& [id, va] : a.rules.attachments) {
        auto it = b.rules.attachments.find(id);
        if (it == b.rules.attachments.end() || it->second.size() != va.size()) return false;
        for (std::size_t i = 0; i < va.size(); ++i) {
            const FractalAttachment& x = va[i];
            const FractalAttachment& y = it->second[i];
            if (x.edge != y.edge || std::abs(x.from - y.from) > tol ||
                std::abs(x.to - y.to) > tol || x.child != y.child ||
                !almost_equal(x.rel, y.rel, tol))
                return false;
        }
    }
    return true;
}

}  // namespace tiling
