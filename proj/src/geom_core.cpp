#include "aircanyon/geom_core.hpp"

#include <algorithm>
#include <cmath>

#include "aircanyon/errors.hpp"

namespace aircanyon {

using geom::Point2;
using geom::Vec2;

namespace {

constexpr double kPi = 3.14159265358979323846;

double deg2rad(double d) { return d * kPi / 180.0; }
double rad2deg(double r) { return r * 180.0 / kPi; }

// Bearing of a direction vector: degrees clockwise from north (+y).
double bearing_deg(const Vec2& d) { return rad2deg(std::atan2(d.x, d.y)); }

double fold_orientation(double deg) {
    double v = std::fmod(deg, 180.0);
    if (v < 0.0) v += 180.0;
    if (v >= 180.0) v -= 180.0;
    return v;
}

StreetAxis axis_from_orientation(const Point2& origin, double orientation_deg) {
    double r = deg2rad(orientation_deg);
    return {origin, {std::sin(r), std::cos(r)}, orientation_deg};
}

std::vector<Point2> distinct_ring(const geom::Polygon2D& poly) {
    auto pts = poly.ring();
    pts.pop_back();
    return pts;
}

}  // namespace

std::vector<Point2> street_points(const CgStreet& street) {
    if (street.is_surface()) return distinct_ring(street.surface().boundary);
    return street.centerline().polyline;
}

geom::Point2 street_centroid(const CgStreet& street) {
    if (street.is_surface()) return street.surface().boundary.centroid();
    const auto& pl = street.centerline().polyline;
    double total = 0.0;
    Point2 acc{0.0, 0.0};
    for (std::size_t i = 0; i + 1 < pl.size(); ++i) {
        double len = geom::norm(pl[i + 1] - pl[i]);
        Point2 mid = (pl[i] + pl[i + 1]) * 0.5;
        acc = acc + mid * len;
        total += len;
    }
    if (total <= 0.0) throw GeometryError("zero-length centerline");
    return acc * (1.0 / total);
}

StreetAxis street_axis(const CgStreet& street) {
    if (street.is_surface()) {
        // Principal axis of the ring vertices (direction of least second
        // moment about the axis = major PCA eigenvector).
        auto pts = distinct_ring(street.surface().boundary);
        Point2 mean{0.0, 0.0};
        for (const auto& p : pts) mean = mean + p;
        mean = mean * (1.0 / static_cast<double>(pts.size()));
        double cxx = 0.0, cxy = 0.0, cyy = 0.0;
        for (const auto& p : pts) {
            Vec2 d = p - mean;
            cxx += d.x * d.x;
            cxy += d.x * d.y;
            cyy += d.y * d.y;
        }
        double phi = 0.5 * std::atan2(2.0 * cxy, cxx - cyy);
        Vec2 dir{std::cos(phi), std::sin(phi)};
        return axis_from_orientation(mean, fold_orientation(bearing_deg(dir)));
    }

    const auto& pl = street.centerline().polyline;
    // Length-weighted mean of segment bearings with the doubled-angle trick,
    // so a segment and its reverse pull the average the same way.
    double c2 = 0.0, s2 = 0.0, total = 0.0;
    for (std::size_t i = 0; i + 1 < pl.size(); ++i) {
        Vec2 seg = pl[i + 1] - pl[i];
        double len = geom::norm(seg);
        if (len <= 0.0) continue;
        double theta = std::atan2(seg.x, seg.y);  // bearing, radians
        c2 += len * std::cos(2.0 * theta);
        s2 += len * std::sin(2.0 * theta);
        total += len;
    }
    if (total <= 0.0) throw GeometryError("zero-length centerline");
    double theta_mean = 0.5 * std::atan2(s2, c2);
    return axis_from_orientation(street_centroid(street),
                                 fold_orientation(rad2deg(theta_mean)));
}

double street_width(const CgStreet& street, const StreetAxis& axis, const GeoConfig& cfg) {
    if (!street.is_surface()) return street.centerline().width;

    const auto& poly = street.surface().boundary;
    auto extent = geom::project_points(distinct_ring(poly), axis.origin, axis.direction);
    Vec2 chord_dir = geom::perp(axis.direction);
    double sum = 0.0;
    int hits = 0;
    const int n = cfg.width_sample_count;
    for (int i = 0; i < n; ++i) {
        double t = extent.lo + (i + 0.5) / static_cast<double>(n) * extent.length();
        Point2 station = axis.origin + axis.direction * t;
        double chord = geom::line_polygon_chord(poly, station, chord_dir);
        if (chord > 0.0) {
            sum += chord;
            ++hits;
        }
    }
    if (hits == 0) throw GeometryError("street polygon yields no perpendicular chords");
    return sum / static_cast<double>(hits);
}

bool borders(const CgBuilding& building, const CgStreet& street, const GeoConfig& cfg) {
    if (street.is_surface()) {
        const auto& boundary = street.surface().boundary;
        if (geom::polygons_overlap(building.footprint, boundary)) return false;
        return geom::polygon_polygon_distance(building.footprint, boundary) <=
               cfg.border_distance_max;
    }
    const auto& cl = street.centerline();
    double d = geom::polyline_polygon_distance(cl.polyline, building.footprint);
    double to_surface = d - cl.width / 2.0;
    if (to_surface < 0.0) return false;  // footprint reaches into the carriageway
    return to_surface <= cfg.border_distance_max;
}

bool continuously_aligned(const std::vector<const CgBuilding*>& buildings,
                          const CgStreet& street, const StreetAxis& axis,
                          const GeoConfig& cfg) {
    if (buildings.empty()) return false;
    auto extent = geom::project_points(street_points(street), axis.origin, axis.direction);
    if (extent.length() <= 0.0) return false;

    std::vector<geom::Interval> intervals;
    for (const CgBuilding* b : buildings) {
        auto iv = geom::project_points(distinct_ring(b->footprint), axis.origin, axis.direction);
        iv.lo = std::max(iv.lo, extent.lo);
        iv.hi = std::min(iv.hi, extent.hi);
        if (iv.hi > iv.lo) intervals.push_back(iv);
    }
    if (intervals.empty()) return false;
    std::sort(intervals.begin(), intervals.end(),
              [](const geom::Interval& a, const geom::Interval& b) { return a.lo < b.lo; });

    std::vector<geom::Interval> merged{intervals.front()};
    for (std::size_t i = 1; i < intervals.size(); ++i) {
        if (intervals[i].lo <= merged.back().hi) {
            merged.back().hi = std::max(merged.back().hi, intervals[i].hi);
        } else {
            merged.push_back(intervals[i]);
        }
    }

    double covered = 0.0;
    for (const auto& iv : merged) covered += iv.length();
    if (covered / extent.length() < cfg.coverage_min) return false;
    for (std::size_t i = 1; i < merged.size(); ++i) {
        if (merged[i].lo - merged[i - 1].hi > cfg.gap_max) return false;
    }
    return true;
}

SideSplit split_sides(const std::vector<const CgBuilding*>& buildings, const StreetAxis& axis) {
    SideSplit split;
    for (const CgBuilding* b : buildings) {
        double s = geom::cross(axis.direction, b->footprint.centroid() - axis.origin);
        if (s < 0.0) {
            split.side_1.push_back(b);
        } else if (s > 0.0) {
            split.side_2.push_back(b);
        } else {
            throw AmbiguityError("building centroid lies exactly on the street axis", b->id);
        }
    }
    return split;
}

double average_height(const std::vector<const CgBuilding*>& buildings) {
    if (buildings.empty()) throw DomainError("average_height of an empty building set");
    double sum = 0.0;
    for (const CgBuilding* b : buildings) sum += b->measured_height;
    return sum / static_cast<double>(buildings.size());
}

std::optional<double> roof_slope(const CgBuilding& building) {
    if (building.roof_surfaces.empty()) return std::nullopt;
    double weighted = 0.0, total_area = 0.0;
    for (const auto& surf : building.roof_surfaces) {
        geom::Point3 n = surf.newell_normal();
        double nlen = std::sqrt(n.x * n.x + n.y * n.y + n.z * n.z);
        if (nlen <= 0.0) continue;
        double angle = rad2deg(std::acos(std::clamp(std::abs(n.z) / nlen, 0.0, 1.0)));
        double area = 0.5 * nlen;
        weighted += angle * area;
        total_area += area;
    }
    if (total_area <= 0.0) return std::nullopt;
    return std::clamp(weighted / total_area, 0.0, 90.0);
}

double albedo_from(const std::optional<std::string>& material,
                   const std::optional<std::array<int, 3>>& color, const AlbedoTable& table) {
    if (material) {
        auto it = table.find(*material);
        if (it != table.end()) return it->second;
    }
    if (color) {
        double lum = (0.2126 * (*color)[0] + 0.7152 * (*color)[1] + 0.0722 * (*color)[2]) / 255.0;
        return 0.05 + 0.80 * lum;
    }
    return 0.20;
}

double albedo(const CgBuilding& building, const AlbedoTable& table) {
    return albedo_from(building.wall_material, building.wall_color, table);
}

double albedo(const CgStreet& /*street*/, const AlbedoTable& table) {
    // Streets in the source subset carry no material or color attributes.
    return albedo_from(std::nullopt, std::nullopt, table);
}

}  // namespace aircanyon
