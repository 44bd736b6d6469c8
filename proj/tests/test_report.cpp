#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "aircanyon/citygml.hpp"
#include "aircanyon/config.hpp"
#include "aircanyon/errors.hpp"
#include "aircanyon/report.hpp"
#include "test_util.hpp"

using namespace aircanyon;
using namespace aircanyon::report;

namespace {

CityModel fixture_model() {
    std::ifstream f(std::string(AIRCANYON_FIXTURE_DIR) + "/canyon_80_40.json");
    REQUIRE(f.good());
    return parse_cityjson_lite(f, "canyon_80_40.json").model;
}

Inventory fixture_inventory() {
    RunConfig cfg = load_config(std::nullopt);
    auto model = fixture_model();
    Inventory inv;
    inv.source_name = model.source_name;
    inv.city = model;
    inv.canyons = oupp::extract_street_canyons(model, {cfg.geo, cfg.shape});
    inv.config = config_snapshot(cfg);
    return inv;
}

}  // namespace

TEST_CASE("configuration defaults and partial-file merge") {
    RunConfig def = load_config(std::nullopt);
    CHECK(def.geo.border_distance_max == doctest::Approx(3.0));
    CHECK(def.geo.gap_max == doctest::Approx(5.0));
    CHECK(def.geo.coverage_min == doctest::Approx(0.8));
    CHECK(def.flow.strong_intensity_min == doctest::Approx(5.0));
    CHECK(def.shape.wide_max == doctest::Approx(0.5));
    CHECK(def.albedo_table.at("asphalt") == doctest::Approx(0.12));

    nlohmann::ordered_json partial = {{"geo", {{"border_distance_max", 4.5}}},
                                      {"albedo_table", {{"thatch", 0.45}}}};
    RunConfig merged = config_from_json(partial);
    CHECK(merged.geo.border_distance_max == doctest::Approx(4.5));
    CHECK(merged.geo.gap_max == doctest::Approx(5.0));  // untouched default
    CHECK(merged.albedo_table.at("thatch") == doctest::Approx(0.45));
    CHECK(merged.albedo_table.at("asphalt") == doctest::Approx(0.12));

    nlohmann::ordered_json bad = {{"geo", {{"border_distance_max", -1.0}}}};
    CHECK_THROWS_AS(config_from_json(bad), ConfigError);
    CHECK_THROWS_AS(load_config(std::string("/no/such/config.json")), ConfigError);
}

TEST_CASE("round_sig9 trims to nine significant digits") {
    CHECK(round_sig9(1.0 / 3.0) == doctest::Approx(0.333333333).epsilon(1e-12));
    CHECK(round_sig9(123456789.123) == doctest::Approx(123456789.0));
    CHECK(round_sig9(0.0) == 0.0);
    CHECK(round_sig9(-2.5) == -2.5);
}

TEST_CASE("city model JSON round trip preserves every field") {
    auto model = fixture_model();
    auto doc = city_to_json(model);
    auto back = city_from_json(doc, model.source_name);
    REQUIRE(back.buildings.size() == model.buildings.size());
    REQUIRE(back.streets.size() == model.streets.size());
    for (std::size_t i = 0; i < model.buildings.size(); ++i) {
        CHECK(back.buildings[i].id == model.buildings[i].id);
        CHECK(back.buildings[i].measured_height == model.buildings[i].measured_height);
        CHECK(back.buildings[i].footprint.ring().size() ==
              model.buildings[i].footprint.ring().size());
    }
    CHECK(back.streets[0].id == model.streets[0].id);
    CHECK(back.streets[0].name == model.streets[0].name);
}

TEST_CASE("inventory serialization is deterministic and round-trips") {
    auto inv = fixture_inventory();
    REQUIRE(inv.canyons.size() == 1);

    auto doc1 = inventory_to_json(inv);
    auto doc2 = inventory_to_json(inv);
    CHECK(doc1.dump(2) == doc2.dump(2));

    auto back = inventory_from_json(doc1);
    REQUIRE(back.canyons.size() == 1);
    CHECK(back.canyons[0].id == inv.canyons[0].id);
    CHECK(back.canyons[0].street == inv.canyons[0].street);
    CHECK(back.canyons[0].buildings_1 == inv.canyons[0].buildings_1);
    CHECK(back.canyons[0].buildings_2 == inv.canyons[0].buildings_2);
    CHECK(back.canyons[0].in_aq.height_to_width_ratio ==
          doctest::Approx(inv.canyons[0].in_aq.height_to_width_ratio));
    CHECK(back.canyons[0].street_width_m == doctest::Approx(inv.canyons[0].street_width_m));
    CHECK(inventory_to_json(back).dump(2) == doc1.dump(2));
}

TEST_CASE("inventory deserialization rejects dangling ids") {
    auto inv = fixture_inventory();
    auto doc = inventory_to_json(inv);
    doc["canyons"][0]["buildings_1"][0] = "no-such-id";
    CHECK_THROWS_AS(inventory_from_json(doc), ValidationError);
}

TEST_CASE("classification produces a complete, round-trippable report") {
    auto inv = fixture_inventory();
    RunConfig cfg = load_config(std::nullopt);
    aq::MeteorologicalConditions met{{5.0, 270.0, std::nullopt}, std::nullopt};
    auto rep = classify_inventory(inv, met, cfg);
    REQUIRE(rep.canyons.size() == 1);
    const auto& c = rep.canyons[0];
    CHECK(c.flow.regime == aq::FlowRegime::Skimming);
    CHECK(c.flow.vortices.size() == 2);
    CHECK(c.scfus);
    CHECK(c.potentially_polluted);
    CHECK(c.relative_angle == doctest::Approx(90.0));
    REQUIRE(c.advisory.advisory.has_value());

    auto doc = report_to_json(rep);
    auto back = report_from_json(doc);
    REQUIRE(back.canyons.size() == 1);
    CHECK(back.canyons[0].flow.regime == c.flow.regime);
    CHECK(back.canyons[0].flow.vortices.size() == c.flow.vortices.size());
    CHECK(back.canyons[0].scfus == c.scfus);
    CHECK(report_to_json(back).dump(2) == doc.dump(2));

    // Serialized enums use the closed vocabulary tokens.
    CHECK(doc["canyons"][0]["regime"] == "skimming");
    CHECK(doc["canyons"][0]["vortices"][0]["origin"] == "mechanically induced");
    CHECK(doc["canyons"][0]["vortices"][0]["shape"] == "roll-type");
}

TEST_CASE("report without a cross wind records the advisory absence reason") {
    auto inv = fixture_inventory();
    RunConfig cfg = load_config(std::nullopt);
    aq::MeteorologicalConditions met{{5.0, 0.0, std::nullopt}, std::nullopt};
    auto rep = classify_inventory(inv, met, cfg);
    REQUIRE(rep.canyons.size() == 1);
    CHECK_FALSE(rep.canyons[0].advisory.advisory.has_value());
    auto doc = report_to_json(rep);
    CHECK(doc["canyons"][0]["advisory_absent_reason"] == "no-cross-wind");
    CHECK_FALSE(doc["canyons"][0].contains("advisory"));
}

TEST_CASE("text rendering summarizes every canyon") {
    auto inv = fixture_inventory();
    RunConfig cfg = load_config(std::nullopt);
    aq::MeteorologicalConditions met{{5.0, 270.0, std::nullopt}, std::nullopt};
    auto rep = classify_inventory(inv, met, cfg);
    auto text = render_text(rep);
    CHECK(text.find("1 canyon") != std::string::npos);
    CHECK(text.find("canyon:s-main") != std::string::npos);
    CHECK(text.find("skimming") != std::string::npos);

    CanyonReport empty;
    empty.scenario = met;
    CHECK(render_text(empty).find("0 canyons") != std::string::npos);
}

TEST_CASE("GeoJSON rendering carries all objects and a CRS note") {
    auto inv = fixture_inventory();
    RunConfig cfg = load_config(std::nullopt);
    aq::MeteorologicalConditions met{{5.0, 270.0, std::nullopt}, std::nullopt};
    auto rep = classify_inventory(inv, met, cfg);
    auto gj = render_geojson(rep);
    CHECK(gj["type"] == "FeatureCollection");
    CHECK(gj.contains("crs_note"));
    // 8 buildings + 1 street + 1 canyon extent.
    REQUIRE(gj["features"].size() == 10);
    int canyon_features = 0;
    for (const auto& f : gj["features"]) {
        CHECK(f["type"] == "Feature");
        CHECK(f["geometry"]["type"] == "Polygon");
        if (f["properties"]["kind"] == "canyon") {
            ++canyon_features;
            CHECK(f["properties"]["regime"] == "skimming");
            CHECK(f["properties"]["scfus"] == true);
        }
    }
    CHECK(canyon_features == 1);
    // Deterministic rendering.
    CHECK(render_geojson(rep).dump(2) == gj.dump(2));
}

TEST_CASE("atomic file write replaces content wholesale") {
    std::string path = "test_report_atomic.tmp.json";
    write_file_atomic(path, "first\n");
    write_file_atomic(path, "second\n");
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == "second\n");
    std::remove(path.c_str());
}
