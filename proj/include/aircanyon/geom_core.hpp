#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "aircanyon/city_model.hpp"

namespace aircanyon {

// Free parameters of the geometric predicates. All lengths in meters.
struct GeoConfig {
    double border_distance_max = 3.0;  // building-to-street distance cap
    double gap_max = 5.0;              // largest tolerated frontage gap
    double coverage_min = 0.8;         // fraction of street extent covered
    int width_sample_count = 64;       // stations for polygon width sampling
};

// Street reference axis. orientation_deg is degrees clockwise from north,
// folded into [0, 180) so a street and its reverse share one orientation.
struct StreetAxis {
    geom::Point2 origin;
    geom::Vec2 direction;  // unit
    double orientation_deg = 0.0;
};

// Centerline form: length-weighted mean segment direction (doubled-angle
// average, so opposite bearings reinforce). Polygon form: principal axis of
// the ring vertices. Throws GeometryError on zero-length geometry.
StreetAxis street_axis(const CgStreet& street);

// Centerline form: the stored nominal width. Polygon form: mean perpendicular
// chord over cfg.width_sample_count stations along the axis (empty stations
// skipped). Throws GeometryError if every station misses the polygon.
double street_width(const CgStreet& street, const StreetAxis& axis, const GeoConfig& cfg);

// True iff the footprint is within cfg.border_distance_max (inclusive) of the
// street geometry and does not overlap the street surface interior.
bool borders(const CgBuilding& building, const CgStreet& street, const GeoConfig& cfg);

// Projects each footprint onto the axis as an interval; true iff the interval
// union covers >= cfg.coverage_min of the street's own axis extent and no gap
// between consecutive intervals exceeds cfg.gap_max. Empty set -> false.
bool continuously_aligned(const std::vector<const CgBuilding*>& buildings,
                          const CgStreet& street, const StreetAxis& axis,
                          const GeoConfig& cfg);

// Partition by the sign of cross(axis.direction, centroid - origin):
// negative -> side_1, positive -> side_2. Throws AmbiguityError when a
// centroid lies exactly on the axis.
struct SideSplit {
    std::vector<const CgBuilding*> side_1;
    std::vector<const CgBuilding*> side_2;
};
SideSplit split_sides(const std::vector<const CgBuilding*>& buildings, const StreetAxis& axis);

// Arithmetic mean of measured_height. Throws DomainError on an empty set.
double average_height(const std::vector<const CgBuilding*>& buildings);

// Area-weighted mean angle between roof-surface normals and vertical, in
// [0, 90] degrees. No roof surfaces -> nullopt (flat-roof assumption).
std::optional<double> roof_slope(const CgBuilding& building);

using AlbedoTable = std::map<std::string, double>;

// Fallback ladder: material table entry, else RGB relative luminance scaled
// into [0.05, 0.85], else 0.20.
double albedo_from(const std::optional<std::string>& material,
                   const std::optional<std::array<int, 3>>& color, const AlbedoTable& table);
double albedo(const CgBuilding& building, const AlbedoTable& table);
double albedo(const CgStreet& street, const AlbedoTable& table);

// Representative points of the street geometry (ring or polyline vertices).
std::vector<geom::Point2> street_points(const CgStreet& street);
// Centroid of the street geometry (area centroid for surfaces, length-weighted
// midpoint average for centerlines).
geom::Point2 street_centroid(const CgStreet& street);

}  // namespace aircanyon
