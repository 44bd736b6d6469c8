#include <CLI11.hpp>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "aircanyon/citygml.hpp"
#include "aircanyon/config.hpp"
#include "aircanyon/errors.hpp"
#include "aircanyon/oupp.hpp"
#include "aircanyon/report.hpp"

namespace {

using aircanyon::ConfigError;
using aircanyon::ParseError;
using aircanyon::RunConfig;
using aircanyon::ValidationError;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitValidation = 2;
constexpr int kExitUsage = 64;
constexpr int kExitConfig = 78;

std::optional<std::string> effective_config_path(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("AIRCANYON_CONFIG"); env && *env) return std::string(env);
    return std::nullopt;
}

bool looks_like_xml(const std::string& path) {
    if (path.ends_with(".gml") || path.ends_with(".xml")) return true;
    if (path.ends_with(".json")) return false;
    std::ifstream in(path);
    char c = 0;
    while (in.get(c)) {
        if (!std::isspace(static_cast<unsigned char>(c))) return c == '<';
    }
    return false;
}

ordered_json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read file: " + path);
    try {
        return ordered_json::parse(in);
    } catch (const ordered_json::parse_error& e) {
        throw ParseError("malformed JSON in " + path + ": " + e.what());
    }
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
    } else {
        aircanyon::report::write_file_atomic(out_path, content);
    }
}

int run_extract(const std::string& city_path, const std::string& config_flag,
                const std::string& out_path) {
    RunConfig cfg = aircanyon::load_config(effective_config_path(config_flag));

    std::ifstream in(city_path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot read city file: " << city_path << "\n";
        return kExitParse;
    }
    std::string name = std::filesystem::path(city_path).filename().string();
    aircanyon::ParsedCity parsed = looks_like_xml(city_path)
                                       ? aircanyon::parse_citygml(in, name)
                                       : aircanyon::parse_cityjson_lite(in, name);
    for (const auto& w : parsed.warnings) std::cerr << "warning: " << w << "\n";

    auto findings = aircanyon::validate_model(parsed.model);
    if (!findings.empty()) {
        for (const auto& f : findings) {
            std::cerr << "finding: " << f.message;
            if (!f.object_id.empty()) std::cerr << " [id: " << f.object_id << "]";
            std::cerr << "\n";
        }
        return kExitValidation;
    }

    aircanyon::report::Inventory inv;
    inv.source_name = parsed.model.source_name;
    inv.canyons = aircanyon::oupp::extract_street_canyons(parsed.model, {cfg.geo, cfg.shape});
    inv.city = std::move(parsed.model);
    inv.config = aircanyon::config_snapshot(cfg);
    emit(out_path, aircanyon::report::inventory_to_json(inv).dump(2) + "\n");
    return kExitOk;
}

int run_classify(const std::string& canyons_path, double wind_speed, double wind_dir,
                 std::optional<double> turbulence, const std::string& thermal_path,
                 const std::string& config_flag, const std::string& out_path) {
    RunConfig cfg = aircanyon::load_config(effective_config_path(config_flag));

    auto inv = aircanyon::report::inventory_from_json(read_json_file(canyons_path));

    aircanyon::aq::MeteorologicalConditions met;
    met.wind.speed = wind_speed;
    met.wind.direction_from = wind_dir;
    met.wind.turbulence_intensity = turbulence;
    if (!thermal_path.empty()) {
        ordered_json tj = read_json_file(thermal_path);
        aircanyon::aq::ThermalConditions t;
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
    auto wind_findings = aircanyon::aq::validate_instance(met.wind);
    if (!wind_findings.empty()) {
        for (const auto& f : wind_findings) std::cerr << "error: " << f.message << "\n";
        return kExitUsage;
    }

    auto rep = aircanyon::report::classify_inventory(inv, met, cfg);
    emit(out_path, aircanyon::report::report_to_json(rep).dump(2) + "\n");
    return kExitOk;
}

int run_report(const std::string& in_path, const std::string& format,
               const std::string& out_path) {
    auto rep = aircanyon::report::report_from_json(read_json_file(in_path));
    if (format == "text") {
        emit(out_path, aircanyon::report::render_text(rep));
    } else {
        emit(out_path, aircanyon::report::render_geojson(rep).dump(2) + "\n");
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"street canyon extraction and air-quality pre-assessment"};
    app.set_version_flag("--version", aircanyon::kToolVersion);
    app.require_subcommand(1);

    std::string city_path, canyons_path, in_path, out_path, config_flag, thermal_path;
    std::string format = "text";
    double wind_speed = 0.0, wind_dir = 0.0;
    double turbulence = -1.0;

    auto* extract = app.add_subcommand("extract", "detect street canyons in a city model");
    extract->add_option("--city", city_path, "CityGML-lite XML or JSON twin")->required();
    extract->add_option("--config", config_flag, "run configuration (JSON)");
    extract->add_option("--out", out_path, "canyon inventory output path")->required();

    auto* classify = app.add_subcommand("classify", "derive flow and pollution classifications");
    classify->add_option("--canyons", canyons_path, "canyon inventory from extract")->required();
    classify->add_option("--wind-speed", wind_speed, "ambient wind speed, m/s")
        ->required()
        ->check(CLI::NonNegativeNumber);
    classify->add_option("--wind-dir", wind_dir, "wind direction (from), degrees [0, 360)")
        ->required()
        ->check(CLI::Range(0.0, 360.0).description("in [0, 360)"));
    classify->add_option("--turbulence", turbulence, "turbulence intensity fraction")
        ->check(CLI::NonNegativeNumber);
    classify->add_option("--thermal", thermal_path, "thermal conditions (JSON)");
    classify->add_option("--config", config_flag, "run configuration (JSON)");
    classify->add_option("--out", out_path, "report output path")->required();

    auto* report = app.add_subcommand("report", "render a classification report");
    report->add_option("--in", in_path, "report file from classify")->required();
    report->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "geojson"}));
    report->add_option("--out", out_path, "output path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return kExitOk;
    } catch (const CLI::CallForVersion&) {
        std::cout << aircanyon::kToolVersion << "\n";
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }
    if (wind_dir >= 360.0) {
        std::cerr << "usage error: --wind-dir must be below 360\n";
        return kExitUsage;
    }

    try {
        if (extract->parsed()) return run_extract(city_path, config_flag, out_path);
        if (classify->parsed()) {
            std::optional<double> turb;
            if (turbulence >= 0.0 && classify->count("--turbulence") > 0) turb = turbulence;
            return run_classify(canyons_path, wind_speed, wind_dir, turb, thermal_path,
                                config_flag, out_path);
        }
        if (report->parsed()) return run_report(in_path, format, out_path);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return kExitUsage;
}
