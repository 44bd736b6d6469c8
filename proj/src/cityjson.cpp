#include <cmath>
#include <json.hpp>

#include "aircanyon/citygml.hpp"
#include "aircanyon/errors.hpp"

namespace aircanyon {

using nlohmann::json;

namespace {

[[noreturn]] void schema_fail(const std::string& path, const std::string& msg) {
    throw ValidationError("schema violation at " + path + ": " + msg);
}

double require_number(const json& j, const std::string& path) {
    if (!j.is_number()) schema_fail(path, "expected a number");
    double v = j.get<double>();
    if (!std::isfinite(v)) schema_fail(path, "non-finite number");
    return v;
}

std::string require_string(const json& j, const std::string& path) {
    if (!j.is_string()) schema_fail(path, "expected a string");
    return j.get<std::string>();
}

std::vector<geom::Point2> read_points2(const json& j, const std::string& path) {
    if (!j.is_array()) schema_fail(path, "expected an array of [x, y] points");
    std::vector<geom::Point2> pts;
    for (std::size_t i = 0; i < j.size(); ++i) {
        std::string p = path + "/" + std::to_string(i);
        const json& pj = j[i];
        if (!pj.is_array() || pj.size() < 2) schema_fail(p, "expected [x, y]");
        pts.push_back({require_number(pj[0], p + "/0"), require_number(pj[1], p + "/1")});
    }
    return pts;
}

std::vector<geom::Point3> read_points3(const json& j, const std::string& path) {
    if (!j.is_array()) schema_fail(path, "expected an array of [x, y, z] points");
    std::vector<geom::Point3> pts;
    for (std::size_t i = 0; i < j.size(); ++i) {
        std::string p = path + "/" + std::to_string(i);
        const json& pj = j[i];
        if (!pj.is_array() || pj.size() < 3) schema_fail(p, "expected [x, y, z]");
        pts.push_back({require_number(pj[0], p + "/0"), require_number(pj[1], p + "/1"),
                       require_number(pj[2], p + "/2")});
    }
    return pts;
}

geom::Polygon2D read_polygon(const json& j, const std::string& path) {
    try {
        return geom::Polygon2D::from_ring(read_points2(j, path));
    } catch (const GeometryError& e) {
        schema_fail(path, std::string("degenerate ring: ") + e.what());
    }
}

CgBuilding read_building(const json& j, const std::string& path) {
    if (!j.is_object()) schema_fail(path, "expected an object");
    if (!j.contains("id")) schema_fail(path, "missing 'id'");
    if (!j.contains("footprint")) schema_fail(path, "missing 'footprint'");
    if (!j.contains("measured_height")) schema_fail(path, "missing 'measured_height'");

    CgBuilding b{.id = require_string(j["id"], path + "/id"),
                 .footprint = read_polygon(j["footprint"], path + "/footprint"),
                 .measured_height = require_number(j["measured_height"], path + "/measured_height")};
    if (!(b.measured_height > 0.0)) schema_fail(path + "/measured_height", "must be > 0");

    if (j.contains("roof_surfaces")) {
        const json& roofs = j["roof_surfaces"];
        if (!roofs.is_array()) schema_fail(path + "/roof_surfaces", "expected an array");
        for (std::size_t i = 0; i < roofs.size(); ++i) {
            std::string p = path + "/roof_surfaces/" + std::to_string(i);
            try {
                b.roof_surfaces.push_back(geom::Polygon3D::from_ring(read_points3(roofs[i], p)));
            } catch (const GeometryError& e) {
                schema_fail(p, std::string("bad roof surface: ") + e.what());
            }
        }
    }
    if (j.contains("wall_material")) {
        b.wall_material = require_string(j["wall_material"], path + "/wall_material");
    }
    if (j.contains("wall_color")) {
        const json& c = j["wall_color"];
        std::string p = path + "/wall_color";
        if (!c.is_array() || c.size() != 3) schema_fail(p, "expected [r, g, b]");
        std::array<int, 3> rgb{};
        for (int i = 0; i < 3; ++i) {
            if (!c[i].is_number_integer()) schema_fail(p, "expected integers");
            rgb[i] = c[i].get<int>();
            if (rgb[i] < 0 || rgb[i] > 255) schema_fail(p, "components must be in 0..255");
        }
        b.wall_color = rgb;
    }
    return b;
}

CgStreet read_street(const json& j, const std::string& path) {
    if (!j.is_object()) schema_fail(path, "expected an object");
    if (!j.contains("id")) schema_fail(path, "missing 'id'");
    CgStreet s;
    s.id = require_string(j["id"], path + "/id");
    if (j.contains("name")) s.name = require_string(j["name"], path + "/name");

    if (j.contains("boundary")) {
        s.geometry = StreetSurface{read_polygon(j["boundary"], path + "/boundary")};
    } else if (j.contains("centerline")) {
        auto pts = read_points2(j["centerline"], path + "/centerline");
        if (pts.size() < 2) schema_fail(path + "/centerline", "needs at least 2 points");
        if (!j.contains("nominal_width")) schema_fail(path, "centerline form requires 'nominal_width'");
        double w = require_number(j["nominal_width"], path + "/nominal_width");
        if (!(w > 0.0)) schema_fail(path + "/nominal_width", "must be > 0");
        s.geometry = StreetCenterline{std::move(pts), w};
    } else {
        schema_fail(path, "street needs 'boundary' or 'centerline'");
    }
    return s;
}

}  // namespace

ParsedCity parse_cityjson_lite(std::istream& document, const std::string& source_name) {
    json root;
    try {
        root = json::parse(document);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!root.is_object()) throw ValidationError("schema violation at /: expected an object");

    ParsedCity out;
    out.model.source_name = source_name;
    if (root.contains("buildings")) {
        const json& arr = root["buildings"];
        if (!arr.is_array()) schema_fail("/buildings", "expected an array");
        for (std::size_t i = 0; i < arr.size(); ++i) {
            out.model.buildings.push_back(
                read_building(arr[i], "/buildings/" + std::to_string(i)));
        }
    }
    if (root.contains("streets")) {
        const json& arr = root["streets"];
        if (!arr.is_array()) schema_fail("/streets", "expected an array");
        for (std::size_t i = 0; i < arr.size(); ++i) {
            out.model.streets.push_back(read_street(arr[i], "/streets/" + std::to_string(i)));
        }
    }
    for (const auto& [key, value] : root.items()) {
        if (key != "buildings" && key != "streets" && key != "schema_version") {
            out.warnings.push_back("skipped unknown key '" + key + "'");
        }
    }
    return out;
}

}  // namespace aircanyon
