#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "aircanyon/geometry.hpp"

namespace aircanyon {

struct CgBuilding {
    std::string id;
    geom::Polygon2D footprint;
    double measured_height = 0.0;  // meters, > 0
    std::vector<geom::Polygon3D> roof_surfaces;
    std::optional<std::string> wall_material;
    std::optional<std::array<int, 3>> wall_color;  // RGB, 0-255
};

// Street surface given directly as a polygon.
struct StreetSurface {
    geom::Polygon2D boundary;
};

// Street given as a centerline polyline plus a nominal width.
struct StreetCenterline {
    std::vector<geom::Point2> polyline;  // >= 2 points
    double width = 0.0;                  // meters, > 0
};

struct CgStreet {
    std::string id;
    std::variant<StreetSurface, StreetCenterline> geometry;
    std::optional<std::string> name;

    bool is_surface() const { return std::holds_alternative<StreetSurface>(geometry); }
    const StreetSurface& surface() const { return std::get<StreetSurface>(geometry); }
    const StreetCenterline& centerline() const { return std::get<StreetCenterline>(geometry); }
};

// Immutable after parsing; safe to share read-only across threads.
struct CityModel {
    std::vector<CgBuilding> buildings;
    std::vector<CgStreet> streets;
    std::string source_name;
};

struct ValidationFinding {
    std::string object_id;  // empty for model-level findings
    std::string message;
};

// Reports every invariant violation; an empty list means the model is valid.
// Never mutates the model.
std::vector<ValidationFinding> validate_model(const CityModel& model);

}  // namespace aircanyon
