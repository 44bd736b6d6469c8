#include "aircanyon/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "aircanyon/errors.hpp"

namespace aircanyon::geom {

double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
double cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
double norm(const Vec2& a) { return std::hypot(a.x, a.y); }

Vec2 normalized(const Vec2& a) {
    double n = norm(a);
    if (n <= 0.0) throw GeometryError("cannot normalize zero-length vector");
    return {a.x / n, a.y / n};
}

Vec2 perp(const Vec2& a) { return {-a.y, a.x}; }

namespace {

double ring_signed_area(const std::vector<Point2>& closed) {
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < closed.size(); ++i) {
        s += cross(closed[i], closed[i + 1]);
    }
    return 0.5 * s;
}

bool near(const Point2& a, const Point2& b, double tol) {
    return std::abs(a.x - b.x) <= tol && std::abs(a.y - b.y) <= tol;
}

int orient_sign(const Point2& a, const Point2& b, const Point2& c) {
    double v = cross(b - a, c - a);
    if (v > 0) return 1;
    if (v < 0) return -1;
    return 0;
}

bool on_segment(const Point2& a, const Point2& b, const Point2& p) {
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

}  // namespace

std::vector<Point2> normalize_ring(std::vector<Point2> pts) {
    // Drop the explicit closing vertex, merge consecutive duplicates.
    if (pts.size() >= 2 && near(pts.front(), pts.back(), kVertexMergeTol)) {
        pts.pop_back();
    }
    std::vector<Point2> out;
    out.reserve(pts.size() + 1);
    for (const auto& p : pts) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
            throw GeometryError("non-finite coordinate in ring");
        }
        if (out.empty() || !near(out.back(), p, kVertexMergeTol)) {
            out.push_back(p);
        }
    }
    while (out.size() >= 2 && near(out.front(), out.back(), kVertexMergeTol)) {
        out.pop_back();
    }
    if (out.size() < 3) {
        throw GeometryError("ring has fewer than 3 distinct vertices");
    }
    bool all_collinear = true;
    for (std::size_t i = 2; i < out.size(); ++i) {
        if (orient_sign(out[0], out[1], out[i]) != 0) {
            all_collinear = false;
            break;
        }
    }
    if (all_collinear) {
        throw GeometryError("ring vertices are collinear");
    }
    out.push_back(out.front());
    if (ring_signed_area(out) < 0.0) {
        std::reverse(out.begin(), out.end());
    }
    return out;
}

bool segments_intersect(const Point2& a, const Point2& b,
                        const Point2& c, const Point2& d) {
    int o1 = orient_sign(a, b, c);
    int o2 = orient_sign(a, b, d);
    int o3 = orient_sign(c, d, a);
    int o4 = orient_sign(c, d, b);
    if (o1 != o2 && o3 != o4) return true;
    if (o1 == 0 && on_segment(a, b, c)) return true;
    if (o2 == 0 && on_segment(a, b, d)) return true;
    if (o3 == 0 && on_segment(c, d, a)) return true;
    if (o4 == 0 && on_segment(c, d, b)) return true;
    return false;
}

bool ring_self_intersects(const std::vector<Point2>& closed_ring) {
    const std::size_t n = closed_ring.size() - 1;  // edges
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            const Point2& a = closed_ring[i];
            const Point2& b = closed_ring[i + 1];
            const Point2& c = closed_ring[j];
            const Point2& d = closed_ring[j + 1];
            if (adjacent) {
                // Adjacent edges may only meet at the shared endpoint.
                // A spike (collinear fold-back) puts the far endpoint of one
                // edge onto the other edge.
                const Point2& shared = (j == i + 1) ? b : a;
                const Point2& tip1 = (j == i + 1) ? a : b;
                const Point2& tip2 = (j == i + 1) ? d : c;
                if (orient_sign(c, d, tip1) == 0 && on_segment(c, d, tip1) &&
                    !near(tip1, shared, kVertexMergeTol)) {
                    return true;
                }
                if (orient_sign(a, b, tip2) == 0 && on_segment(a, b, tip2) &&
                    !near(tip2, shared, kVertexMergeTol)) {
                    return true;
                }
                continue;
            }
            if (segments_intersect(a, b, c, d)) return true;
        }
    }
    return false;
}

Polygon2D Polygon2D::from_ring(std::vector<Point2> pts) {
    Polygon2D poly;
    poly.ring_ = normalize_ring(std::move(pts));
    return poly;
}

bool Polygon2D::is_simple() const { return !ring_self_intersects(ring_); }

double Polygon2D::area() const { return ring_signed_area(ring_); }

Point2 Polygon2D::centroid() const {
    double a = 0.0, cx = 0.0, cy = 0.0;
    for (std::size_t i = 0; i + 1 < ring_.size(); ++i) {
        double w = cross(ring_[i], ring_[i + 1]);
        a += w;
        cx += (ring_[i].x + ring_[i + 1].x) * w;
        cy += (ring_[i].y + ring_[i + 1].y) * w;
    }
    a *= 0.5;
    return {cx / (6.0 * a), cy / (6.0 * a)};
}

bool Polygon2D::contains(const Point2& p) const {
    const std::size_t n = ring_.size() - 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (point_segment_distance(p, ring_[i], ring_[i + 1]) <= kVertexMergeTol) {
            return true;
        }
    }
    bool inside = false;
    for (std::size_t i = 0; i < n; ++i) {
        const Point2& a = ring_[i];
        const Point2& b = ring_[i + 1];
        if ((a.y > p.y) != (b.y > p.y)) {
            double xint = a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
            if (p.x < xint) inside = !inside;
        }
    }
    return inside;
}

double point_segment_distance(const Point2& p, const Point2& a, const Point2& b) {
    Vec2 ab = b - a;
    double len2 = dot(ab, ab);
    if (len2 <= 0.0) return norm(p - a);
    double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
    return norm(p - (a + ab * t));
}

double segment_segment_distance(const Point2& a, const Point2& b,
                                const Point2& c, const Point2& d) {
    if (segments_intersect(a, b, c, d)) return 0.0;
    return std::min({point_segment_distance(a, c, d), point_segment_distance(b, c, d),
                     point_segment_distance(c, a, b), point_segment_distance(d, a, b)});
}

double polygon_polygon_distance(const Polygon2D& a, const Polygon2D& b) {
    double best = std::numeric_limits<double>::infinity();
    const auto& ra = a.ring();
    const auto& rb = b.ring();
    for (std::size_t i = 0; i + 1 < ra.size(); ++i) {
        for (std::size_t j = 0; j + 1 < rb.size(); ++j) {
            best = std::min(best, segment_segment_distance(ra[i], ra[i + 1], rb[j], rb[j + 1]));
            if (best == 0.0) return 0.0;
        }
    }
    return best;
}

double polyline_polygon_distance(const std::vector<Point2>& line, const Polygon2D& poly) {
    if (!line.empty() && poly.contains(line.front())) return 0.0;
    double best = std::numeric_limits<double>::infinity();
    const auto& r = poly.ring();
    for (std::size_t i = 0; i + 1 < line.size(); ++i) {
        for (std::size_t j = 0; j + 1 < r.size(); ++j) {
            best = std::min(best, segment_segment_distance(line[i], line[i + 1], r[j], r[j + 1]));
            if (best == 0.0) return 0.0;
        }
    }
    return best;
}

bool polygons_overlap(const Polygon2D& a, const Polygon2D& b) {
    const auto& ra = a.ring();
    const auto& rb = b.ring();
    // Proper edge crossing means shared interior area.
    for (std::size_t i = 0; i + 1 < ra.size(); ++i) {
        for (std::size_t j = 0; j + 1 < rb.size(); ++j) {
            int o1 = orient_sign(ra[i], ra[i + 1], rb[j]);
            int o2 = orient_sign(ra[i], ra[i + 1], rb[j + 1]);
            int o3 = orient_sign(rb[j], rb[j + 1], ra[i]);
            int o4 = orient_sign(rb[j], rb[j + 1], ra[i + 1]);
            if (o1 * o2 < 0 && o3 * o4 < 0) return true;
        }
    }
    // Containment: a vertex or the centroid of one strictly inside the other.
    auto strictly_inside = [](const Polygon2D& poly, const Point2& p) {
        const auto& r = poly.ring();
        for (std::size_t i = 0; i + 1 < r.size(); ++i) {
            if (point_segment_distance(p, r[i], r[i + 1]) <= kVertexMergeTol) return false;
        }
        return poly.contains(p);
    };
    if (strictly_inside(b, a.centroid()) || strictly_inside(a, b.centroid())) return true;
    for (std::size_t i = 0; i + 1 < ra.size(); ++i) {
        if (strictly_inside(b, ra[i])) return true;
    }
    for (std::size_t j = 0; j + 1 < rb.size(); ++j) {
        if (strictly_inside(a, rb[j])) return true;
    }
    return false;
}

double line_polygon_chord(const Polygon2D& poly, const Point2& origin, const Vec2& dir) {
    Vec2 d = normalized(dir);
    Vec2 n = perp(d);  // signed distance to the line = dot(p - origin, n)
    const auto& r = poly.ring();
    std::vector<double> hits;
    for (std::size_t i = 0; i + 1 < r.size(); ++i) {
        double da = dot(r[i] - origin, n);
        double db = dot(r[i + 1] - origin, n);
        // Half-open straddle test so a vertex on the line counts once.
        if ((da < 0.0 && db >= 0.0) || (db < 0.0 && da >= 0.0)) {
            double t = da / (da - db);
            Point2 p = r[i] + (r[i + 1] - r[i]) * t;
            hits.push_back(dot(p - origin, d));
        }
    }
    if (hits.size() < 2) return 0.0;
    std::sort(hits.begin(), hits.end());
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < hits.size(); i += 2) {
        total += hits[i + 1] - hits[i];
    }
    return total;
}

Interval project_points(const std::vector<Point2>& pts, const Point2& origin, const Vec2& dir) {
    if (pts.empty()) throw GeometryError("cannot project empty point set");
    Vec2 d = normalized(dir);
    Interval iv{std::numeric_limits<double>::infinity(),
                -std::numeric_limits<double>::infinity()};
    for (const auto& p : pts) {
        double t = dot(p - origin, d);
        iv.lo = std::min(iv.lo, t);
        iv.hi = std::max(iv.hi, t);
    }
    return iv;
}

Polygon3D Polygon3D::from_ring(std::vector<Point3> pts) {
    if (pts.size() >= 2) {
        const Point3& a = pts.front();
        const Point3& b = pts.back();
        if (std::abs(a.x - b.x) <= kVertexMergeTol && std::abs(a.y - b.y) <= kVertexMergeTol &&
            std::abs(a.z - b.z) <= kVertexMergeTol) {
            pts.pop_back();
        }
    }
    if (pts.size() < 3) throw GeometryError("3D ring has fewer than 3 distinct vertices");
    for (const auto& p : pts) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(p.z)) {
            throw GeometryError("non-finite coordinate in 3D ring");
        }
    }
    Polygon3D poly;
    poly.ring_ = std::move(pts);

    // Planarity: every vertex within 1e-6 * diameter of the best-fit plane
    // through the centroid with the Newell normal.
    Point3 c{0, 0, 0};
    for (const auto& p : poly.ring_) {
        c.x += p.x;
        c.y += p.y;
        c.z += p.z;
    }
    double inv = 1.0 / static_cast<double>(poly.ring_.size());
    c = {c.x * inv, c.y * inv, c.z * inv};
    Point3 n = poly.newell_normal();
    double nlen = std::sqrt(n.x * n.x + n.y * n.y + n.z * n.z);
    if (nlen <= 0.0) throw GeometryError("degenerate 3D ring (zero area)");
    double diam = 0.0;
    for (std::size_t i = 0; i < poly.ring_.size(); ++i) {
        for (std::size_t j = i + 1; j < poly.ring_.size(); ++j) {
            double dx = poly.ring_[i].x - poly.ring_[j].x;
            double dy = poly.ring_[i].y - poly.ring_[j].y;
            double dz = poly.ring_[i].z - poly.ring_[j].z;
            diam = std::max(diam, std::sqrt(dx * dx + dy * dy + dz * dz));
        }
    }
    for (const auto& p : poly.ring_) {
        double dist = std::abs((p.x - c.x) * n.x + (p.y - c.y) * n.y + (p.z - c.z) * n.z) / nlen;
        if (dist > 1e-6 * diam) {
            throw GeometryError("3D ring is not planar within tolerance");
        }
    }
    return poly;
}

Point3 Polygon3D::newell_normal() const {
    Point3 n{0, 0, 0};
    const std::size_t m = ring_.size();
    for (std::size_t i = 0; i < m; ++i) {
        const Point3& a = ring_[i];
        const Point3& b = ring_[(i + 1) % m];
        n.x += (a.y - b.y) * (a.z + b.z);
        n.y += (a.z - b.z) * (a.x + b.x);
        n.z += (a.x - b.x) * (a.y + b.y);
    }
    return n;
}

double Polygon3D::area() const {
    Point3 n = newell_normal();
    return 0.5 * std::sqrt(n.x * n.x + n.y * n.y + n.z * n.z);
}

}  // namespace aircanyon::geom
