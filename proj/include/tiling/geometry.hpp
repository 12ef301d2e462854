#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <string>
#include <utility>
#include <vector>

namespace tiling {

// Global tolerances. All acceptance checks are tolerance-based, so plain
// doubles are used throughout; generators only emit angles that are
// multiples of 9 degrees, well inside this budget at desk depths.
inline constexpr double kPointTol = 1e-9;  // point coincidence
inline constexpr double kAreaTol = 1e-9;   // minimum significant overlap area
inline constexpr double kSnapGrid = 1e-6;  // default vertex weld grid

struct TilingError : std::runtime_error {
    TilingError(std::string c, const std::string& msg)
        : std::runtime_error(msg), code(std::move(c)) {}
    std::string code;
};

struct Point {
    double x = 0.0;
    double y = 0.0;

    Point operator+(const Point& o) const { return {x + o.x, y + o.y}; }
    Point operator-(const Point& o) const { return {x - o.x, y - o.y}; }
    Point operator*(double s) const { return {x * s, y * s}; }
    bool operator==(const Point&) const = default;
};

double dot(const Point& a, const Point& b);
double cross(const Point& a, const Point& b);
double norm(const Point& a);
double distance(const Point& a, const Point& b);
bool almost_equal(const Point& a, const Point& b, double tol = kPointTol);
bool is_finite(const Point& p);

// Planar similarity: reflect across the x-axis (if set), then rotate
// counter-clockwise by rotation_deg, then scale, then translate.
// The application order is part of the external contract.
struct Transform {
    double scale = 1.0;
    double rotation_deg = 0.0;
    bool reflect = false;
    Point translation{};

    static Transform identity() { return {}; }
    static Transform rotation(double deg) { return {1.0, deg, false, {}}; }
    static Transform translate(Point t) { return {1.0, 0.0, false, t}; }
    // Rotation about an arbitrary center.
    static Transform rotation_about(double deg, const Point& center);
};

Point apply(const Transform& t, const Point& p);
// apply(compose(a,b), p) == apply(a, apply(b, p))
Transform compose(const Transform& outer, const Transform& inner);
bool almost_equal(const Transform& a, const Transform& b, double tol = kPointTol);

// Simple polygon, counter-clockwise, at least 3 vertices. Construction
// validates orientation and simplicity within tolerance.
class Polygon {
public:
    explicit Polygon(std::vector<Point> vertices);

    const std::vector<Point>& vertices() const { return verts_; }
    std::size_t size() const { return verts_.size(); }
    const Point& operator[](std::size_t i) const { return verts_[i]; }

    double area() const { return area_; }
    Point centroid() const;
    // Vertices mapped through t, re-normalized to counter-clockwise when t
    // reflects. Side indices are not preserved under reflection; use
    // transformed_vertices when the side mapping matters.
    Polygon transformed(const Transform& t) const;

private:
    std::vector<Point> verts_;
    double area_ = 0.0;
};

// Raw vertex images under t, in prototype vertex order (no renormalization).
std::vector<Point> transformed_vertices(const Polygon& poly, const Transform& t);

double polygon_area(const Polygon& poly);
double signed_area(const std::vector<Point>& pts);

// Area of the intersection region. Non-convex inputs are ear-clipped into
// triangles and clipped pairwise. Returns exactly 0 for results below the
// area tolerance (disjoint or boundary contact).
double overlap_area(const Polygon& a, const Polygon& b);

// Quantizes coordinates to grid cells; points within tolerance share a key
// except at cell boundaries (the welder below handles those).
std::pair<std::int64_t, std::int64_t> snap_key(const Point& p, double grid);

// Vertex welding: maps nearby points (within ~grid) to one canonical id.
class Welder {
public:
    explicit Welder(double grid = kSnapGrid) : grid_(grid) {}
    int id_for(const Point& p);
    const Point& point(int id) const { return points_[static_cast<std::size_t>(id)]; }
    std::size_t size() const { return points_.size(); }

private:
    struct KeyHash {
        std::size_t operator()(const std::pair<std::int64_t, std::int64_t>& k) const;
    };
    double grid_;
    std::vector<Point> points_;
    std::unordered_map<std::pair<std::int64_t, std::int64_t>, std::vector<int>, KeyHash> cells_;
};

struct BoundingBox {
    double min_x = 0, min_y = 0, max_x = 0, max_y = 0;
    double width() const { return max_x - min_x; }
    double height() const { return max_y - min_y; }
    void expand(const Point& p);
    void expand(const BoundingBox& o);
    bool overlaps(const BoundingBox& o, double tol = 0.0) const;
};

BoundingBox bounding_box(const std::vector<Point>& pts);

// Convex hull (monotone chain), CCW without repeated first point.
std::vector<Point> convex_hull(std::vector<Point> pts);

// Ear-clipping triangulation of a simple CCW polygon.
std::vector<std::array<Point, 3>> triangulate(const Polygon& poly);

}  // namespace tiling
