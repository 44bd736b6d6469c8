#include "aircanyon/report.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "aircanyon/citygml.hpp"
#include "aircanyon/errors.hpp"

namespace aircanyon::report {

namespace {

ordered_json num(double v) { return round_sig9(v); }

ordered_json point_json(const geom::Point2& p) {
    return ordered_json::array({num(p.x), num(p.y)});
}

geom::Point2 point_from(const ordered_json& j) {
    if (!j.is_array() || j.size() < 2) throw ValidationError("expected [x, y] point");
    return {j[0].get<double>(), j[1].get<double>()};
}

ordered_json ring_json(const std::vector<geom::Point2>& ring) {
    ordered_json arr = ordered_json::array();
    for (const auto& p : ring) arr.push_back(point_json(p));
    return arr;
}

ordered_json ring3_json(const std::vector<geom::Point3>& ring) {
    ordered_json arr = ordered_json::array();
    for (const auto& p : ring) {
        arr.push_back(ordered_json::array({num(p.x), num(p.y), num(p.z)}));
    }
    return arr;
}

std::string require_string(const ordered_json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_string()) {
        throw ValidationError(std::string("missing or non-string field '") + key + "'");
    }
    return j[key].get<std::string>();
}

double require_number(const ordered_json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number()) {
        throw ValidationError(std::string("missing or non-numeric field '") + key + "'");
    }
    return j[key].get<double>();
}

std::vector<std::string> string_list(const ordered_json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_array()) {
        throw ValidationError(std::string("missing or non-array field '") + key + "'");
    }
    std::vector<std::string> out;
    for (const auto& v : j[key]) out.push_back(v.get<std::string>());
    return out;
}

ordered_json provenance_json(const std::vector<oupp::ProvenanceEntry>& entries) {
    ordered_json arr = ordered_json::array();
    for (const auto& e : entries) {
        arr.push_back({{"field", e.field}, {"operation", e.operation}, {"sources", e.sources}});
    }
    return arr;
}

std::vector<oupp::ProvenanceEntry> provenance_from(const ordered_json& arr) {
    std::vector<oupp::ProvenanceEntry> out;
    for (const auto& j : arr) {
        oupp::ProvenanceEntry e;
        e.field = require_string(j, "field");
        e.operation = require_string(j, "operation");
        e.sources = string_list(j, "sources");
        out.push_back(std::move(e));
    }
    return out;
}

ordered_json canyon_json(const oupp::OuppStreetCanyon& c) {
    return ordered_json{
        {"id", c.id},
        {"street_id", c.street},
        {"buildings_1", c.buildings_1},
        {"buildings_2", c.buildings_2},
        {"hw_ratio", num(c.in_aq.height_to_width_ratio)},
        {"hh_ratio", num(c.in_aq.height_to_height_ratio)},
        {"shape", std::string(aq::to_token(c.in_aq.shape))},
        {"orientation_deg", num(c.in_aq.orientation)},
        {"scfus", oupp::classify_scfus(c)},
        {"avg_height_1", num(c.avg_height_1)},
        {"avg_height_2", num(c.avg_height_2)},
        {"street_width", num(c.street_width_m)},
        {"axis",
         {{"origin", point_json(c.axis.origin)},
          {"direction", point_json(c.axis.direction)},
          {"orientation_deg", num(c.axis.orientation_deg)}}},
        {"side_1_centroid", point_json(c.side_1_centroid)},
        {"side_2_centroid", point_json(c.side_2_centroid)},
        {"provenance", provenance_json(c.provenance)},
    };
}

oupp::OuppStreetCanyon canyon_from(const ordered_json& j) {
    oupp::OuppStreetCanyon c;
    c.id = require_string(j, "id");
    c.street = require_string(j, "street_id");
    c.buildings_1 = string_list(j, "buildings_1");
    c.buildings_2 = string_list(j, "buildings_2");
    c.in_aq.height_to_width_ratio = require_number(j, "hw_ratio");
    c.in_aq.height_to_height_ratio = require_number(j, "hh_ratio");
    auto shape = aq::canyon_shape_from_token(require_string(j, "shape"));
    if (!shape) throw ValidationError("unknown canyon shape token", c.id);
    c.in_aq.shape = *shape;
    c.in_aq.orientation = require_number(j, "orientation_deg");
    c.avg_height_1 = require_number(j, "avg_height_1");
    c.avg_height_2 = require_number(j, "avg_height_2");
    c.street_width_m = require_number(j, "street_width");
    if (!j.contains("axis")) throw ValidationError("canyon is missing its axis", c.id);
    const auto& axis = j["axis"];
    c.axis.origin = point_from(axis["origin"]);
    c.axis.direction = point_from(axis["direction"]);
    c.axis.orientation_deg = require_number(axis, "orientation_deg");
    c.side_1_centroid = point_from(j["side_1_centroid"]);
    c.side_2_centroid = point_from(j["side_2_centroid"]);
    if (j.contains("provenance")) c.provenance = provenance_from(j["provenance"]);
    return c;
}

}  // namespace

ordered_json city_to_json(const CityModel& model) {
    ordered_json buildings = ordered_json::array();
    for (const auto& b : model.buildings) {
        ordered_json bj{{"id", b.id},
                        {"footprint", ring_json(b.footprint.ring())},
                        {"measured_height", num(b.measured_height)}};
        if (!b.roof_surfaces.empty()) {
            ordered_json roofs = ordered_json::array();
            for (const auto& r : b.roof_surfaces) roofs.push_back(ring3_json(r.ring()));
            bj["roof_surfaces"] = roofs;
        }
        if (b.wall_material) bj["wall_material"] = *b.wall_material;
        if (b.wall_color) {
            bj["wall_color"] = ordered_json::array(
                {(*b.wall_color)[0], (*b.wall_color)[1], (*b.wall_color)[2]});
        }
        buildings.push_back(std::move(bj));
    }
    ordered_json streets = ordered_json::array();
    for (const auto& s : model.streets) {
        ordered_json sj{{"id", s.id}};
        if (s.is_surface()) {
            sj["boundary"] = ring_json(s.surface().boundary.ring());
        } else {
            sj["centerline"] = ring_json(s.centerline().polyline);
            sj["nominal_width"] = num(s.centerline().width);
        }
        if (s.name) sj["name"] = *s.name;
        streets.push_back(std::move(sj));
    }
    return ordered_json{{"buildings", buildings}, {"streets", streets}};
}

CityModel city_from_json(const ordered_json& doc, const std::string& source_name) {
    std::istringstream in(doc.dump());
    return parse_cityjson_lite(in, source_name).model;
}

ordered_json inventory_to_json(const Inventory& inv) {
    ordered_json canyons = ordered_json::array();
    for (const auto& c : inv.canyons) canyons.push_back(canyon_json(c));
    return ordered_json{
        {"schema_version", kSchemaVersion}, {"tool_version", kToolVersion},
        {"source_name", inv.source_name},   {"config", inv.config},
        {"city", city_to_json(inv.city)},   {"canyons", canyons},
    };
}

Inventory inventory_from_json(const ordered_json& doc) {
    if (!doc.is_object() || !doc.contains("canyons") || !doc.contains("city")) {
        throw ValidationError("not a canyon inventory document");
    }
    Inventory inv;
    inv.source_name = doc.contains("source_name") ? doc["source_name"].get<std::string>() : "";
    inv.city = city_from_json(doc["city"], inv.source_name);
    if (doc.contains("config")) inv.config = doc["config"];
    for (const auto& cj : doc["canyons"]) {
        auto canyon = canyon_from(cj);
        bool street_known = false;
        for (const auto& s : inv.city.streets) street_known |= (s.id == canyon.street);
        if (!street_known) throw ValidationError("canyon references unknown street", canyon.street);
        for (const auto& ids : {canyon.buildings_1, canyon.buildings_2}) {
            for (const auto& id : ids) {
                bool known = false;
                for (const auto& b : inv.city.buildings) known |= (b.id == id);
                if (!known) throw ValidationError("canyon references unknown building", id);
            }
        }
        inv.canyons.push_back(std::move(canyon));
    }
    return inv;
}

CanyonReport classify_inventory(const Inventory& inv, const aq::MeteorologicalConditions& met,
                                const RunConfig& cfg) {
    CanyonReport rep;
    rep.source_name = inv.source_name;
    rep.city = inv.city;
    rep.scenario = met;
    rep.config = config_snapshot(cfg);
    for (const auto& src : inv.canyons) {
        ClassifiedCanyon cc;
        cc.canyon = src;
        cc.wind_context = flow::assign_sides(cc.canyon, met.wind);
        cc.relative_angle = flow::relative_wind_angle(met.wind, cc.canyon.in_aq.orientation);
        cc.flow = flow::derive_vortices(cc.canyon, met, cfg.flow);
        cc.scfus = oupp::classify_scfus(cc.canyon);
        cc.potentially_polluted = oupp::classify_potentially_polluted(cc.canyon, cc.flow);
        cc.advisory = flow::dispersion_advisory(cc.canyon, cc.wind_context);
        rep.canyons.push_back(std::move(cc));
    }
    return rep;
}

namespace {

ordered_json scenario_json(const aq::MeteorologicalConditions& met) {
    ordered_json wind{{"speed", num(met.wind.speed)},
                      {"direction_from", num(met.wind.direction_from)}};
    if (met.wind.turbulence_intensity) {
        wind["turbulence_intensity"] = num(*met.wind.turbulence_intensity);
    }
    ordered_json out{{"wind", wind}};
    if (met.thermal) {
        ordered_json t = ordered_json::object();
        auto put = [&](const char* key, const std::optional<double>& v) {
            if (v) t[key] = num(*v);
        };
        put("sunshine_duration", met.thermal->sunshine_duration);
        put("t_air", met.thermal->t_air);
        put("t_street_bottom", met.thermal->t_street_bottom);
        put("t_leeward_wall", met.thermal->t_leeward_wall);
        put("t_windward_wall", met.thermal->t_windward_wall);
        out["thermal"] = t;
    }
    return out;
}

aq::MeteorologicalConditions scenario_from(const ordered_json& j) {
    aq::MeteorologicalConditions met;
    if (!j.contains("wind")) throw ValidationError("scenario is missing 'wind'");
    const auto& w = j["wind"];
    met.wind.speed = require_number(w, "speed");
    met.wind.direction_from = require_number(w, "direction_from");
    if (w.contains("turbulence_intensity")) {
        met.wind.turbulence_intensity = w["turbulence_intensity"].get<double>();
    }
    if (j.contains("thermal")) {
        aq::ThermalConditions t;
        const auto& tj = j["thermal"];
        auto get = [&](const char* key) -> std::optional<double> {
            if (tj.contains(key)) return tj[key].get<double>();
            return std::nullopt;
        };
        t.sunshine_duration = get("sunshine_duration");
        t.t_air = get("t_air");
        t.t_street_bottom = get("t_street_bottom");
        t.t_leeward_wall = get("t_leeward_wall");
        t.t_windward_wall = get("t_windward_wall");
        met.thermal = t;
    }
    return met;
}

ordered_json vortex_json(const aq::Vortex& v) {
    ordered_json j{{"intensity", std::string(aq::to_token(v.intensity))},
                   {"rotation_direction", std::string(aq::to_token(v.rotation_direction))},
                   {"location", std::string(aq::to_token(v.location))},
                   {"origin", std::string(aq::to_token(v.origin))}};
    if (v.shape) j["shape"] = std::string(aq::to_token(*v.shape));
    return j;
}

aq::Vortex vortex_from(const ordered_json& j) {
    aq::Vortex v;
    auto intensity = aq::vortex_intensity_from_token(require_string(j, "intensity"));
    auto rotation = aq::rotation_direction_from_token(require_string(j, "rotation_direction"));
    auto location = aq::canyon_level_from_token(require_string(j, "location"));
    auto origin = aq::vortex_origin_from_token(require_string(j, "origin"));
    if (!intensity || !rotation || !location || !origin) {
        throw ValidationError("vortex carries a token outside its closed enumeration");
    }
    v.intensity = *intensity;
    v.rotation_direction = *rotation;
    v.location = *location;
    v.origin = *origin;
    if (j.contains("shape")) {
        auto shape = aq::vortex_shape_from_token(j["shape"].get<std::string>());
        if (!shape) throw ValidationError("unknown vortex shape token");
        v.shape = *shape;
    }
    return v;
}

}  // namespace

ordered_json report_to_json(const CanyonReport& rep) {
    ordered_json canyons = ordered_json::array();
    for (const auto& cc : rep.canyons) {
        ordered_json cj = canyon_json(cc.canyon);
        cj["regime"] = std::string(aq::to_token(cc.flow.regime));
        ordered_json vortices = ordered_json::array();
        for (const auto& v : cc.flow.vortices) vortices.push_back(vortex_json(v));
        cj["vortices"] = vortices;
        cj["relative_angle"] = num(cc.relative_angle);
        if (cc.wind_context) {
            cj["upwind_side"] = std::string(aq::to_token(cc.wind_context->upwind_side));
            cj["downwind_side"] = std::string(aq::to_token(cc.wind_context->downwind_side));
            cj["windward_side"] = std::string(aq::to_token(*cc.canyon.in_aq.windward_side));
            cj["leeward_side"] = std::string(aq::to_token(*cc.canyon.in_aq.leeward_side));
        }
        cj["scfus"] = cc.scfus;
        cj["potentially_polluted"] = cc.potentially_polluted;
        if (cc.advisory.advisory) {
            const auto& a = *cc.advisory.advisory;
            cj["advisory"] = {
                {"lower_region_hotspot", std::string(aq::to_token(a.lower_region_hotspot))},
                {"upper_region_hotspot", std::string(aq::to_token(a.upper_region_hotspot))},
                {"recommendation", a.recommendation},
                {"source", a.source}};
        } else {
            cj["advisory_absent_reason"] = std::string(flow::to_token(*cc.advisory.reason));
        }
        canyons.push_back(std::move(cj));
    }
    return ordered_json{
        {"schema_version", kSchemaVersion}, {"tool_version", kToolVersion},
        {"source_name", rep.source_name},   {"config", rep.config},
        {"scenario", scenario_json(rep.scenario)},
        {"city", city_to_json(rep.city)},   {"canyons", canyons},
    };
}

CanyonReport report_from_json(const ordered_json& doc) {
    if (!doc.is_object() || !doc.contains("canyons") || !doc.contains("scenario")) {
        throw ValidationError("not a canyon report document");
    }
    CanyonReport rep;
    rep.source_name = doc.contains("source_name") ? doc["source_name"].get<std::string>() : "";
    rep.city = city_from_json(doc["city"], rep.source_name);
    rep.scenario = scenario_from(doc["scenario"]);
    if (doc.contains("config")) rep.config = doc["config"];
    for (const auto& cj : doc["canyons"]) {
        ClassifiedCanyon cc;
        cc.canyon = canyon_from(cj);
        auto regime = aq::flow_regime_from_token(require_string(cj, "regime"));
        if (!regime) throw ValidationError("unknown flow regime token", cc.canyon.id);
        cc.flow.regime = *regime;
        for (const auto& vj : cj["vortices"]) cc.flow.vortices.push_back(vortex_from(vj));
        cc.relative_angle = require_number(cj, "relative_angle");
        if (cj.contains("upwind_side")) {
            flow::WindContext ctx;
            ctx.relative_angle = cc.relative_angle;
            ctx.upwind_side = require_string(cj, "upwind_side") == "side_1" ? aq::SideRef::Side1
                                                                            : aq::SideRef::Side2;
            ctx.downwind_side = ctx.upwind_side == aq::SideRef::Side1 ? aq::SideRef::Side2
                                                                      : aq::SideRef::Side1;
            cc.wind_context = ctx;
            cc.canyon.in_aq.windward_side = ctx.downwind_side;
            cc.canyon.in_aq.leeward_side = ctx.upwind_side;
        }
        cc.scfus = cj.value("scfus", false);
        cc.potentially_polluted = cj.value("potentially_polluted", false);
        if (cj.contains("advisory")) {
            flow::Advisory a;
            const auto& aj = cj["advisory"];
            a.lower_region_hotspot = require_string(aj, "lower_region_hotspot") == "side_1"
                                         ? aq::SideRef::Side1
                                         : aq::SideRef::Side2;
            a.upper_region_hotspot = require_string(aj, "upper_region_hotspot") == "side_1"
                                         ? aq::SideRef::Side1
                                         : aq::SideRef::Side2;
            a.recommendation = require_string(aj, "recommendation");
            a.source = require_string(aj, "source");
            cc.advisory.advisory = a;
        } else {
            cc.advisory.reason = cj.value("advisory_absent_reason", "") == "not-SCFUS"
                                     ? flow::AdvisoryAbsence::NotScfus
                                     : flow::AdvisoryAbsence::NoCrossWind;
        }
        rep.canyons.push_back(std::move(cc));
    }
    return rep;
}

std::string render_text(const CanyonReport& rep) {
    std::ostringstream out;
    out << "canyon report";
    if (!rep.source_name.empty()) out << " - " << rep.source_name;
    out << "\n";
    out << rep.canyons.size() << " canyons\n";
    if (rep.canyons.empty()) return out.str();
    out << "id | street | H/W | H/H | shape | regime | vortices | scfus | polluted | advisory\n";
    for (const auto& cc : rep.canyons) {
        out << cc.canyon.id << " | " << cc.canyon.street << " | "
            << round_sig9(cc.canyon.in_aq.height_to_width_ratio) << " | "
            << round_sig9(cc.canyon.in_aq.height_to_height_ratio) << " | "
            << aq::to_token(cc.canyon.in_aq.shape) << " | " << aq::to_token(cc.flow.regime)
            << " | " << cc.flow.vortices.size() << " | " << (cc.scfus ? "yes" : "no") << " | "
            << (cc.potentially_polluted ? "yes" : "no") << " | ";
        if (cc.advisory.advisory) {
            out << cc.advisory.advisory->recommendation << " ("
                << aq::to_token(cc.advisory.advisory->upper_region_hotspot) << ")";
        } else {
            out << "none (" << flow::to_token(*cc.advisory.reason) << ")";
        }
        out << "\n";
    }
    return out.str();
}

namespace {

ordered_json geo_ring(const std::vector<geom::Point2>& ring) {
    // GeoJSON wants one closed ring inside an array of rings.
    return ordered_json::array({ring_json(ring)});
}

}  // namespace

ordered_json render_geojson(const CanyonReport& rep) {
    ordered_json features = ordered_json::array();

    for (const auto& b : rep.city.buildings) {
        ordered_json props{{"kind", "building"},
                           {"id", b.id},
                           {"measured_height", num(b.measured_height)}};
        if (b.wall_material) props["wall_material"] = *b.wall_material;
        features.push_back(
            {{"type", "Feature"},
             {"geometry", {{"type", "Polygon"}, {"coordinates", geo_ring(b.footprint.ring())}}},
             {"properties", props}});
    }

    for (const auto& s : rep.city.streets) {
        ordered_json geometry;
        ordered_json props{{"kind", "street"}, {"id", s.id}};
        if (s.is_surface()) {
            geometry = {{"type", "Polygon"}, {"coordinates", geo_ring(s.surface().boundary.ring())}};
        } else {
            geometry = {{"type", "LineString"}, {"coordinates", ring_json(s.centerline().polyline)}};
            props["nominal_width"] = num(s.centerline().width);
        }
        if (s.name) props["name"] = *s.name;
        features.push_back(
            {{"type", "Feature"}, {"geometry", geometry}, {"properties", props}});
    }

    for (const auto& cc : rep.canyons) {
        // Canyon extent: oriented box spanning the street along the axis and
        // both building rows across it.
        std::vector<geom::Point2> pts;
        for (const auto& s : rep.city.streets) {
            if (s.id == cc.canyon.street) {
                auto sp = street_points(s);
                pts.insert(pts.end(), sp.begin(), sp.end());
            }
        }
        auto in_rows = [&](const std::string& id) {
            for (const auto& bid : cc.canyon.buildings_1) {
                if (bid == id) return true;
            }
            for (const auto& bid : cc.canyon.buildings_2) {
                if (bid == id) return true;
            }
            return false;
        };
        for (const auto& b : rep.city.buildings) {
            if (in_rows(b.id)) {
                for (const auto& p : b.footprint.ring()) pts.push_back(p);
            }
        }
        const auto& axis = cc.canyon.axis;
        auto along = geom::project_points(pts, axis.origin, axis.direction);
        auto across = geom::project_points(pts, axis.origin, geom::perp(axis.direction));
        geom::Vec2 d = axis.direction;
        geom::Vec2 n = geom::perp(d);
        auto corner = [&](double t, double u) { return axis.origin + d * t + n * u; };
        std::vector<geom::Point2> box{corner(along.lo, across.lo), corner(along.hi, across.lo),
                                      corner(along.hi, across.hi), corner(along.lo, across.hi),
                                      corner(along.lo, across.lo)};

        ordered_json props{{"kind", "canyon"},
                           {"id", cc.canyon.id},
                           {"street_id", cc.canyon.street},
                           {"hw_ratio", num(cc.canyon.in_aq.height_to_width_ratio)},
                           {"hh_ratio", num(cc.canyon.in_aq.height_to_height_ratio)},
                           {"shape", std::string(aq::to_token(cc.canyon.in_aq.shape))},
                           {"orientation_deg", num(cc.canyon.in_aq.orientation)},
                           {"regime", std::string(aq::to_token(cc.flow.regime))},
                           {"vortex_count", cc.flow.vortices.size()},
                           {"scfus", cc.scfus},
                           {"potentially_polluted", cc.potentially_polluted}};
        if (cc.advisory.advisory) {
            props["advisory"] = {
                {"lower_region_hotspot",
                 std::string(aq::to_token(cc.advisory.advisory->lower_region_hotspot))},
                {"upper_region_hotspot",
                 std::string(aq::to_token(cc.advisory.advisory->upper_region_hotspot))},
                {"recommendation", cc.advisory.advisory->recommendation},
                {"source", cc.advisory.advisory->source}};
        } else {
            props["advisory_absent_reason"] = std::string(flow::to_token(*cc.advisory.reason));
        }
        features.push_back(
            {{"type", "Feature"},
             {"geometry", {{"type", "Polygon"}, {"coordinates", geo_ring(box)}}},
             {"properties", props}});
    }

    return ordered_json{
        {"type", "FeatureCollection"},
        {"crs_note", "coordinates are in the source's local planar CRS, meters"},
        {"features", features},
    };
}

void write_file_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open for writing: " + tmp.string());
        out << content;
        if (!out) throw std::runtime_error("write failed: " + tmp.string());
    }
    fs::rename(tmp, target);
}

}  // namespace aircanyon::report
