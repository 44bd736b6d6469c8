#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "aircanyon/config.hpp"
#include "aircanyon/flow_rules.hpp"
#include "aircanyon/oupp.hpp"

namespace aircanyon::report {

using nlohmann::ordered_json;

// Output of `extract`: the canyons plus the city geometry they came from, so
// later stages need no second look at the source file.
struct Inventory {
    std::string source_name;
    CityModel city;
    std::vector<oupp::OuppStreetCanyon> canyons;
    ordered_json config;  // snapshot of the extracting run's configuration
};

// One fully classified canyon.
struct ClassifiedCanyon {
    oupp::OuppStreetCanyon canyon;
    aq::Flow flow;
    double relative_angle = 0.0;
    std::optional<flow::WindContext> wind_context;
    bool scfus = false;
    bool potentially_polluted = false;
    flow::AdvisoryResult advisory;
};

struct CanyonReport {
    std::string source_name;
    CityModel city;
    aq::MeteorologicalConditions scenario;
    std::vector<ClassifiedCanyon> canyons;
    ordered_json config;
};

// JSON twin encoding of a city model (numbers rounded to 9 significant
// digits for reproducible output).
ordered_json city_to_json(const CityModel& model);
CityModel city_from_json(const ordered_json& doc, const std::string& source_name);

ordered_json inventory_to_json(const Inventory& inv);
// Throws ParseError / ValidationError on malformed or mismatched documents.
Inventory inventory_from_json(const ordered_json& doc);

// Runs the flow rules and classification axioms over every canyon.
CanyonReport classify_inventory(const Inventory& inv, const aq::MeteorologicalConditions& met,
                                const RunConfig& cfg);

ordered_json report_to_json(const CanyonReport& rep);
CanyonReport report_from_json(const ordered_json& doc);

// Human-readable table.
std::string render_text(const CanyonReport& rep);
// FeatureCollection: building footprints, street geometry, canyon extents;
// classification results attached as feature properties. Coordinates stay in
// the source local CRS (see the crs_note property).
ordered_json render_geojson(const CanyonReport& rep);

// Whole-file atomic write (temp file + rename).
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace aircanyon::report
