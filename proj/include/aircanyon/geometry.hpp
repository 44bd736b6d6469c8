#pragma once

#include <optional>
#include <vector>

namespace aircanyon::geom {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    bool operator==(const Vec2& o) const = default;
};

using Point2 = Vec2;

struct Point3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

double dot(const Vec2& a, const Vec2& b);
double cross(const Vec2& a, const Vec2& b);
double norm(const Vec2& a);
Vec2 normalized(const Vec2& a);
// 90 degrees counter-clockwise.
Vec2 perp(const Vec2& a);

// Tolerance for merging coincident vertices when closing rings (meters).
inline constexpr double kVertexMergeTol = 1e-9;

// Closed CCW exterior ring: first vertex repeated at the end, at least
// 3 distinct vertices, simple (non-self-intersecting). Coordinates in
// meters, local planar CRS.
class Polygon2D {
public:
    // Accepts an open or closed ring in either winding; normalizes to a
    // closed CCW ring with consecutive duplicates merged. Throws
    // GeometryError if the result is degenerate. Simplicity is checked
    // separately (is_simple) so validators can report bad rings as findings.
    static Polygon2D from_ring(std::vector<Point2> pts);

    bool is_simple() const;

    const std::vector<Point2>& ring() const { return ring_; }
    // Number of edges (= distinct vertices).
    std::size_t edge_count() const { return ring_.size() - 1; }

    double area() const;
    Point2 centroid() const;
    bool contains(const Point2& p) const;  // even-odd, boundary counts as inside

private:
    std::vector<Point2> ring_;
};

// Planar 3D ring carrying a roof surface.
class Polygon3D {
public:
    // Throws GeometryError unless the ring has >= 3 distinct vertices and is
    // planar within 1e-6 * (ring diameter).
    static Polygon3D from_ring(std::vector<Point3> pts);

    const std::vector<Point3>& ring() const { return ring_; }
    // Newell normal; length equals twice the enclosed area.
    Point3 newell_normal() const;
    double area() const;

private:
    std::vector<Point3> ring_;
};

// Normalizes a ring exactly as Polygon2D::from_ring does, without the
// simplicity check. Idempotent on already-normalized rings.
std::vector<Point2> normalize_ring(std::vector<Point2> pts);

// True if a ring (closed, first == last) has a pair of improperly
// intersecting non-adjacent edges.
bool ring_self_intersects(const std::vector<Point2>& closed_ring);

double point_segment_distance(const Point2& p, const Point2& a, const Point2& b);
double segment_segment_distance(const Point2& a, const Point2& b,
                                const Point2& c, const Point2& d);
bool segments_intersect(const Point2& a, const Point2& b,
                        const Point2& c, const Point2& d);

// Minimum distance between polygon boundaries; 0 if they touch or overlap.
double polygon_polygon_distance(const Polygon2D& a, const Polygon2D& b);
// Minimum distance from a polyline to a polygon; 0 if any polyline point
// lies inside the polygon or crosses its boundary.
double polyline_polygon_distance(const std::vector<Point2>& line, const Polygon2D& poly);
// True if the interiors of a and b share area (proper edge crossing or
// containment); shared boundary alone does not count.
bool polygons_overlap(const Polygon2D& a, const Polygon2D& b);

// Total length of the intersection of the line {origin + s * dir} with the
// polygon interior. Empty intersection yields 0.
double line_polygon_chord(const Polygon2D& poly, const Point2& origin, const Vec2& dir);

// Projection interval of a point set onto a unit direction through origin.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    double length() const { return hi - lo; }
};
Interval project_points(const std::vector<Point2>& pts, const Point2& origin, const Vec2& dir);

}  // namespace aircanyon::geom
