#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "aircanyon/aq_ontology.hpp"
#include "aircanyon/flow_rules.hpp"
#include "aircanyon/geom_core.hpp"

namespace aircanyon {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kSchemaVersion = "1.0";

struct RunConfig {
    GeoConfig geo;
    flow::FlowRuleConfig flow;
    aq::ShapeThresholds shape;
    AlbedoTable albedo_table;  // defaults merged with any configured entries
};

// Built-in wall/surface albedo values (see docs/albedo.md for the source).
AlbedoTable default_albedo_table();

// Loads the run configuration. Absent path: all defaults. Partial file:
// defaults for missing keys. Throws ConfigError on unreadable or invalid
// files (bad JSON, non-positive thresholds, missing referenced files).
RunConfig load_config(const std::optional<std::string>& path);

// Same merge semantics, from an already-parsed document.
RunConfig config_from_json(const nlohmann::ordered_json& doc);

// The exact configuration embedded into every output's provenance.
nlohmann::ordered_json config_snapshot(const RunConfig& cfg);

// Rounds to 9 significant digits; applied to every number we serialize so
// reruns are byte-identical.
double round_sig9(double v);

}  // namespace aircanyon
