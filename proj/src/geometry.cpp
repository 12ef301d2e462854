#include "tiling/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace tiling {

namespace {

constexpr double kPi = 3.14159265358979323846;

double deg2rad(double d) { return d * kPi / 180.0; }

double normalize_deg(double d) {
    double r = std::fmod(d, 360.0);
    if (r < 0) r += 360.0;
    // Avoid the -0.0 / 360.0 seam.
    if (r >= 360.0 - 1e-12 || r <= 1e-12) r = 0.0;
    return r;
}

// Segment intersection test that ignores shared endpoints.
bool segments_cross(const Point& a, const Point& b, const Point& c, const Point& d, double eps) {
    auto orient = [](const Point& p, const Point& q, const Point& r) {
        return cross(q - p, r - p);
    };
    const double d1 = orient(c, d, a);
    const double d2 = orient(c, d, b);
    const double d3 = orient(a, b, c);
    const double d4 = orient(a, b, d);
    if (((d1 > eps && d2 < -eps) || (d1 < -eps && d2 > eps)) &&
        ((d3 > eps && d4 < -eps) || (d3 < -eps && d4 > eps)))
        return true;
    return false;
}

}  // namespace

double dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }
double cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
double norm(const Point& a) { return std::hypot(a.x, a.y); }
double distance(const Point& a, const Point& b) { return norm(a - b); }

bool almost_equal(const Point& a, const Point& b, double tol) {
    return std::abs(a.x - b.x) <= tol && std::abs(a.y - b.y) <= tol;
}

bool is_finite(const Point& p) { return std::isfinite(p.x) && std::isfinite(p.y); }

Transform Transform::rotation_about(double deg, const Point& center) {
    Transform r{1.0, deg, false, {}};
    r.translation = center - apply(Transform{1.0, deg, false, {}}, center);
    return r;
}

Point apply(const Transform& t, const Point& p) {
    double x = p.x;
    double y = t.reflect ? -p.y : p.y;
    const double c = std::cos(deg2rad(t.rotation_deg));
    const double s = std::sin(deg2rad(t.rotation_deg));
    const Point rotated{x * c - y * s, x * s + y * c};
    return rotated * t.scale + t.translation;
}

Transform compose(const Transform& outer, const Transform& inner) {
    Transform r;
    r.scale = outer.scale * inner.scale;
    r.reflect = outer.reflect != inner.reflect;
    r.rotation_deg = normalize_deg(outer.rotation_deg +
                                   (outer.reflect ? -inner.rotation_deg : inner.rotation_deg));
    r.translation = apply(outer, inner.translation);
    return r;
}

bool almost_equal(const Transform& a, const Transform& b, double tol) {
    if (a.reflect != b.reflect) return false;
    if (std::abs(a.scale - b.scale) > tol) return false;
    double da = std::abs(normalize_deg(a.rotation_deg) - normalize_deg(b.rotation_deg));
    if (da > 180.0) da = 360.0 - da;
    return da <= tol * 360.0 + 1e-9 && almost_equal(a.translation, b.translation, tol);
}

double signed_area(const std::vector<Point>& pts) {
    double s = 0.0;
    const std::size_t n = pts.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& p = pts[i];
        const Point& q = pts[(i + 1) % n];
        s += p.x * q.y - q.x * p.y;
    }
    return 0.5 * s;
}

Polygon::Polygon(std::vector<Point> vertices) : verts_(std::move(vertices)) {
    if (verts_.size() < 3)
        throw TilingError("polygon-size", "polygon needs at least 3 vertices");
    for (const Point& p : verts_)
        if (!is_finite(p)) throw TilingError("polygon-finite", "non-finite vertex coordinate");
    area_ = signed_area(verts_);
    if (area_ <= kAreaTol)
        throw TilingError("polygon-orientation",
                          "polygon must be counter-clockwise with positive area");
    const std::size_t n = verts_.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (j == i + 1 || (i == 0 && j == n - 1)) continue;  // adjacent sides
            if (segments_cross(verts_[i], verts_[(i + 1) % n], verts_[j], verts_[(j + 1) % n],
                               kPointTol))
                throw TilingError("polygon-simple", "polygon is self-intersecting");
        }
    }
}

Point Polygon::centroid() const {
    double cx = 0, cy = 0;
    const std::size_t n = verts_.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& p = verts_[i];
        const Point& q = verts_[(i + 1) % n];
        const double w = p.x * q.y - q.x * p.y;
        cx += (p.x + q.x) * w;
        cy += (p.y + q.y) * w;
    }
    const double a = area_;
    return {cx / (6.0 * a), cy / (6.0 * a)};
}

Polygon Polygon::transformed(const Transform& t) const {
    std::vector<Point> pts = transformed_vertices(*this, t);
    if (t.reflect) std::reverse(pts.begin(), pts.end());
    return Polygon(std::move(pts));
}

std::vector<Point> transformed_vertices(const Polygon& poly, const Transform& t) {
    std::vector<Point> out;
    out.reserve(poly.size());
    for (const Point& p : poly.vertices()) out.push_back(apply(t, p));
    return out;
}

double polygon_area(const Polygon& poly) { return poly.area(); }

namespace {

// Sutherland-Hodgman clip of a convex subject against one half plane.
std::vector<Point> clip_half_plane(const std::vector<Point>& subject, const Point& a,
                                   const Point& b) {
    std::vector<Point> out;
    const std::size_t n = subject.size();
    out.reserve(n + 2);
    for (std::size_t i = 0; i < n; ++i) {
        const Point& cur = subject[i];
        const Point& nxt = subject[(i + 1) % n];
        const double dc = cross(b - a, cur - a);
        const double dn = cross(b - a, nxt - a);
        if (dc >= 0) out.push_back(cur);
        if ((dc > 0 && dn < 0) || (dc < 0 && dn > 0)) {
            const double t = dc / (dc - dn);
            out.push_back(cur + (nxt - cur) * t);
        }
    }
    return out;
}

double convex_clip_area(const std::array<Point, 3>& s, const std::array<Point, 3>& c) {
    std::vector<Point> poly(s.begin(), s.end());
    for (int i = 0; i < 3 && !poly.empty(); ++i)
        poly = clip_half_plane(poly, c[static_cast<std::size_t>(i)],
                               c[static_cast<std::size_t>((i + 1) % 3)]);
    if (poly.size() < 3) return 0.0;
    return std::abs(signed_area(poly));
}

}  // namespace

std::vector<std::array<Point, 3>> triangulate(const Polygon& poly) {
    std::vector<Point> v = poly.vertices();
    std::vector<std::array<Point, 3>> tris;
    tris.reserve(v.size() - 2);
    while (v.size() > 3) {
        const std::size_t n = v.size();
        bool clipped = false;
        for (std::size_t i = 0; i < n; ++i) {
            const Point& prev = v[(i + n - 1) % n];
            const Point& cur = v[i];
            const Point& next = v[(i + 1) % n];
            if (cross(cur - prev, next - cur) <= kAreaTol) continue;  // reflex or flat
            bool contains_other = false;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i || j == (i + n - 1) % n || j == (i + 1) % n) continue;
                const Point& p = v[j];
                const double c1 = cross(cur - prev, p - prev);
                const double c2 = cross(next - cur, p - cur);
                const double c3 = cross(prev - next, p - next);
                if (c1 > -kAreaTol && c2 > -kAreaTol && c3 > -kAreaTol) {
                    contains_other = true;
                    break;
                }
            }
            if (contains_other) continue;
            tris.push_back({prev, cur, next});
            v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
            clipped = true;
            break;
        }
        if (!clipped)
            throw TilingError("triangulate", "ear clipping failed on degenerate polygon");
    }
    tris.push_back({v[0], v[1], v[2]});
    return tris;
}

double overlap_area(const Polygon& a, const Polygon& b) {
    if (!bounding_box(a.vertices()).overlaps(bounding_box(b.vertices()), kPointTol)) return 0.0;
    const auto ta = triangulate(a);
    const auto tb = triangulate(b);
    double total = 0.0;
    for (const auto& s : ta)
        for (const auto& c : tb) total += convex_clip_area(s, c);
    return total < kAreaTol ? 0.0 : total;
}

std::pair<std::int64_t, std::int64_t> snap_key(const Point& p, double grid) {
    if (grid <= 0) throw TilingError("snap-grid", "snap grid must be positive");
    return {static_cast<std::int64_t>(std::llround(p.x / grid)),
            static_cast<std::int64_t>(std::llround(p.y / grid))};
}

std::size_t Welder::KeyHash::operator()(const std::pair<std::int64_t, std::int64_t>& k) const {
    const std::size_t h1 = std::hash<std::int64_t>{}(k.first);
    const std::size_t h2 = std::hash<std::int64_t>{}(k.second);
    return h1 ^ (h2 * 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
}

int Welder::id_for(const Point& p) {
    const auto key = snap_key(p, grid_);
    // 3x3 cell neighborhood lookup, immune to cell-boundary straddling.
    for (std::int64_t dx = -1; dx <= 1; ++dx) {
        for (std::int64_t dy = -1; dy <= 1; ++dy) {
            auto it = cells_.find({key.first + dx, key.second + dy});
            if (it == cells_.end()) continue;
            for (int id : it->second)
                if (almost_equal(points_[static_cast<std::size_t>(id)], p, grid_)) return id;
        }
    }
    const int id = static_cast<int>(points_.size());
    points_.push_back(p);
    cells_[key].push_back(id);
    return id;
}

void BoundingBox::expand(const Point& p) {
    min_x = std::min(min_x, p.x);
    min_y = std::min(min_y, p.y);
    max_x = std::max(max_x, p.x);
    max_y = std::max(max_y, p.y);
}

void BoundingBox::expand(const BoundingBox& o) {
    min_x = std::min(min_x, o.min_x);
    min_y = std::min(min_y, o.min_y);
    max_x = std::max(max_x, o.max_x);
    max_y = std::max(max_y, o.max_y);
}

bool BoundingBox::overlaps(const BoundingBox& o, double tol) const {
    return min_x <= o.max_x + tol && o.min_x <= max_x + tol && min_y <= o.max_y + tol &&
           o.min_y <= max_y + tol;
}

BoundingBox bounding_box(const std::vector<Point>& pts) {
    if (pts.empty()) return {};
    BoundingBox box{pts[0].x, pts[0].y, pts[0].x, pts[0].y};
    for (const Point& p : pts) box.expand(p);
    return box;
}

std::vector<Point> convex_hull(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](const Point& a, const Point& b) { return almost_equal(a, b); }),
              pts.end());
    const std::size_t n = pts.size();
    if (n < 3) return pts;
    std::vector<Point> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (k >= 2 && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0) --k;
        hull[k++] = pts[i];
    }
    const std::size_t lower = k + 1;
    for (std::size_t i = n - 1; i-- > 0;) {
        while (k >= lower && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

}  // namespace tiling
