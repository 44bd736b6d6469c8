#include "aircanyon/config.hpp"

#include <cmath>
#include <fstream>

#include "aircanyon/errors.hpp"

namespace aircanyon {

using nlohmann::ordered_json;

double round_sig9(double v) {
    if (v == 0.0 || !std::isfinite(v)) return v == 0.0 ? 0.0 : v;
    double mag = std::pow(10.0, 8 - std::floor(std::log10(std::abs(v))));
    return std::round(v * mag) / mag;
}

AlbedoTable default_albedo_table() {
    // Representative wall/surface albedos; see docs/albedo.md.
    return {
        {"asphalt", 0.12}, {"concrete", 0.30}, {"brick", 0.30},   {"stone", 0.25},
        {"wood", 0.15},    {"glass", 0.10},    {"metal", 0.35},   {"white paint", 0.70},
        {"tile", 0.20},
    };
}

namespace {

double positive_or_fail(const ordered_json& j, const std::string& key, double fallback) {
    if (!j.contains(key)) return fallback;
    if (!j[key].is_number()) throw ConfigError("config key '" + key + "' must be a number");
    double v = j[key].get<double>();
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw ConfigError("config key '" + key + "' must be > 0");
    }
    return v;
}

}  // namespace

RunConfig config_from_json(const ordered_json& doc) {
    if (!doc.is_object()) throw ConfigError("config document must be a JSON object");
    RunConfig cfg;
    cfg.albedo_table = default_albedo_table();

    if (doc.contains("geo")) {
        const auto& g = doc["geo"];
        cfg.geo.border_distance_max =
            positive_or_fail(g, "border_distance_max", cfg.geo.border_distance_max);
        cfg.geo.gap_max = positive_or_fail(g, "gap_max", cfg.geo.gap_max);
        cfg.geo.coverage_min = positive_or_fail(g, "coverage_min", cfg.geo.coverage_min);
        if (cfg.geo.coverage_min > 1.0) throw ConfigError("coverage_min must be in (0, 1]");
        cfg.geo.width_sample_count = static_cast<int>(
            positive_or_fail(g, "width_sample_count", cfg.geo.width_sample_count));
    }
    if (doc.contains("flow")) {
        const auto& f = doc["flow"];
        cfg.flow.isolated_max = positive_or_fail(f, "isolated_max", cfg.flow.isolated_max);
        cfg.flow.wake_max = positive_or_fail(f, "wake_max", cfg.flow.wake_max);
        cfg.flow.two_vortex_min = positive_or_fail(f, "two_vortex_min", cfg.flow.two_vortex_min);
        cfg.flow.strong_intensity_min =
            positive_or_fail(f, "strong_intensity_min", cfg.flow.strong_intensity_min);
        cfg.flow.thermal_delta_min =
            positive_or_fail(f, "thermal_delta_min", cfg.flow.thermal_delta_min);
        cfg.flow.perpendicular_min =
            positive_or_fail(f, "perpendicular_min", cfg.flow.perpendicular_min);
        if (!(cfg.flow.isolated_max < cfg.flow.wake_max)) {
            throw ConfigError("flow thresholds must satisfy isolated_max < wake_max");
        }
    }
    if (doc.contains("shape")) {
        const auto& s = doc["shape"];
        cfg.shape.wide_max = positive_or_fail(s, "wide_max", cfg.shape.wide_max);
        cfg.shape.narrow_min = positive_or_fail(s, "narrow_min", cfg.shape.narrow_min);
        if (!(cfg.shape.wide_max <= cfg.shape.narrow_min)) {
            throw ConfigError("shape thresholds must satisfy wide_max <= narrow_min");
        }
    }
    if (doc.contains("albedo_table")) {
        const auto& a = doc["albedo_table"];
        ordered_json table;
        if (a.is_string()) {
            std::ifstream in(a.get<std::string>());
            if (!in) {
                throw ConfigError("albedo table file not readable: " + a.get<std::string>());
            }
            try {
                table = ordered_json::parse(in);
            } catch (const ordered_json::parse_error& e) {
                throw ConfigError(std::string("albedo table is not valid JSON: ") + e.what());
            }
        } else {
            table = a;
        }
        if (!table.is_object()) throw ConfigError("albedo table must map material to fraction");
        for (const auto& [material, value] : table.items()) {
            if (!value.is_number()) throw ConfigError("albedo for '" + material + "' must be a number");
            double v = value.get<double>();
            if (v < 0.0 || v > 1.0) {
                throw ConfigError("albedo for '" + material + "' must be in [0, 1]");
            }
            cfg.albedo_table[material] = v;  // overrides the built-in entry
        }
    }
    return cfg;
}

RunConfig load_config(const std::optional<std::string>& path) {
    if (!path) {
        RunConfig cfg;
        cfg.albedo_table = default_albedo_table();
        return cfg;
    }
    std::ifstream in(*path);
    if (!in) throw ConfigError("config file not readable: " + *path);
    ordered_json doc;
    try {
        doc = ordered_json::parse(in);
    } catch (const ordered_json::parse_error& e) {
        throw ConfigError(std::string("config file is not valid JSON: ") + e.what());
    }
    return config_from_json(doc);
}

ordered_json config_snapshot(const RunConfig& cfg) {
    ordered_json albedo = ordered_json::object();
    for (const auto& [material, value] : cfg.albedo_table) {
        albedo[material] = round_sig9(value);
    }
    return ordered_json{
        {"geo",
         {{"border_distance_max", round_sig9(cfg.geo.border_distance_max)},
          {"gap_max", round_sig9(cfg.geo.gap_max)},
          {"coverage_min", round_sig9(cfg.geo.coverage_min)},
          {"width_sample_count", cfg.geo.width_sample_count}}},
        {"flow",
         {{"isolated_max", round_sig9(cfg.flow.isolated_max)},
          {"wake_max", round_sig9(cfg.flow.wake_max)},
          {"two_vortex_min", round_sig9(cfg.flow.two_vortex_min)},
          {"strong_intensity_min", round_sig9(cfg.flow.strong_intensity_min)},
          {"thermal_delta_min", round_sig9(cfg.flow.thermal_delta_min)},
          {"perpendicular_min", round_sig9(cfg.flow.perpendicular_min)}}},
        {"shape",
         {{"wide_max", round_sig9(cfg.shape.wide_max)},
          {"narrow_min", round_sig9(cfg.shape.narrow_min)}}},
        {"albedo_table", albedo},
    };
}

}  // namespace aircanyon
