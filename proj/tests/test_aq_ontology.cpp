#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "aircanyon/aq_ontology.hpp"
#include "aircanyon/errors.hpp"

using namespace aircanyon;
using namespace aircanyon::aq;

TEST_CASE("closed enumerations carry exactly the published vocabularies") {
    auto tokens = [](std::string_view name) {
        std::vector<std::string> out;
        for (auto t : enum_tokens(name)) out.emplace_back(t);
        return out;
    };
    CHECK(tokens("canyon_shape") == std::vector<std::string>{"wide", "square", "narrow"});
    CHECK(tokens("canyon_level") ==
          std::vector<std::string>{"street-level", "building-level", "roof-level"});
    CHECK(tokens("flow_regime") ==
          std::vector<std::string>{"isolated-roughness", "wake-interference", "skimming"});
    CHECK(tokens("vortex_intensity") == std::vector<std::string>{"weak", "strong"});
    CHECK(tokens("rotation_direction") ==
          std::vector<std::string>{"clockwise", "counter-clockwise"});
    CHECK(tokens("vortex_origin") ==
          std::vector<std::string>{"mechanically induced", "thermally induced"});
    CHECK(tokens("vortex_shape") == std::vector<std::string>{"portal", "roll-type", "horseshoe"});
    CHECK(tokens("pollutant_origin") ==
          std::vector<std::string>{"traffic-related", "chemical toxics", "biological toxics"});
    CHECK(tokens("reactivity") == std::vector<std::string>{"reactive", "non-reactive"});
    CHECK(tokens("source_location") == std::vector<std::string>{"street-level", "advected"});
    CHECK(tokens("emission_rate") == std::vector<std::string>{"continuous", "non-continuous"});
    CHECK(enum_names().size() == 11);
    CHECK(enum_tokens("no_such_enum").empty());
}

TEST_CASE("token round-trips cover every enumerator") {
    for (auto name : enum_names()) {
        for (auto tok : enum_tokens(name)) {
            CHECK(validate_enum_token(name, tok).empty());
        }
        CHECK(validate_enum_token(name, "volcanic").size() == 1);
    }
    CHECK(canyon_shape_from_token("narrow") == CanyonShape::Narrow);
    CHECK(to_token(*flow_regime_from_token("skimming")) == "skimming");
    CHECK(to_token(*vortex_origin_from_token("thermally induced")) == "thermally induced");
    CHECK_FALSE(rotation_direction_from_token("widdershins").has_value());
}

TEST_CASE("canyon shape classification") {
    CHECK(classify_canyon_shape(0.3) == CanyonShape::Wide);
    CHECK(classify_canyon_shape(1.0) == CanyonShape::Square);
    CHECK(classify_canyon_shape(2.0) == CanyonShape::Narrow);
    // Thresholds are inclusive for square.
    CHECK(classify_canyon_shape(0.5) == CanyonShape::Square);
    CHECK(classify_canyon_shape(1.5) == CanyonShape::Square);
    CHECK_THROWS_AS(classify_canyon_shape(0.0), DomainError);
    CHECK_THROWS_AS(classify_canyon_shape(-1.0), DomainError);

    ShapeThresholds custom{0.8, 1.2};
    CHECK(classify_canyon_shape(0.7, custom) == CanyonShape::Wide);
    CHECK(classify_canyon_shape(1.0, custom) == CanyonShape::Square);
    CHECK(classify_canyon_shape(1.3, custom) == CanyonShape::Narrow);
}

TEST_CASE("shape classification is monotone in the ratio") {
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> u(0.01, 5.0);
    auto rank = [](CanyonShape s) {
        return s == CanyonShape::Wide ? 0 : (s == CanyonShape::Square ? 1 : 2);
    };
    for (int it = 0; it < 2000; ++it) {
        double a = u(rng), b = u(rng);
        if (a > b) std::swap(a, b);
        CHECK(rank(classify_canyon_shape(a)) <= rank(classify_canyon_shape(b)));
    }
}

TEST_CASE("instance validation: streets, buildings, canyons") {
    AqStreet s{{0, 0}, 12.0, 45.0, 0.2};
    CHECK(validate_instance(s).empty());
    s.width = 0.0;
    s.orientation = 200.0;
    s.albedo = 1.4;
    CHECK(validate_instance(s).size() == 3);

    AqBuilding b{{0, 0}, 25.0, 30.0, 0.3};
    CHECK(validate_instance(b).empty());
    b.height = -1.0;
    b.roof_slope = 95.0;
    CHECK(validate_instance(b).size() == 2);

    AqStreetCanyon c;
    c.shape = CanyonShape::Narrow;
    c.height_to_width_ratio = 2.0;
    c.height_to_height_ratio = 1.0;
    c.orientation = 0.0;
    CHECK(validate_instance(c).empty());
    c.height_to_width_ratio = -2.0;
    CHECK(validate_instance(c).size() == 1);
}

TEST_CASE("instance validation: wind, thermal, sources, flows") {
    AmbientWindConditions w{5.0, 270.0, std::nullopt};
    CHECK(validate_instance(w).empty());
    w.direction_from = 360.0;
    w.speed = -1.0;
    CHECK(validate_instance(w).size() == 2);

    ThermalConditions t;
    t.t_air = 288.0;
    t.t_street_bottom = 291.0;
    CHECK(validate_instance(t).empty());
    t.t_air = -5.0;  // kelvin cannot be negative
    CHECK(validate_instance(t).size() == 1);

    PollutantSource src;
    src.emitted_product = "NOx";
    CHECK(validate_instance(src).empty());
    src.emitted_product.clear();
    CHECK(validate_instance(src).size() == 1);

    Flow f;
    f.regime = FlowRegime::Skimming;
    f.vortices.push_back({VortexIntensity::Strong, RotationDirection::Clockwise,
                          CanyonLevel::StreetLevel, VortexOrigin::MechanicallyInduced,
                          std::nullopt});
    CHECK(validate_instance(f).empty());
}

TEST_CASE("isosurface references must resolve against the city model") {
    CityModel model;
    model.buildings.push_back(
        {"b1", geom::Polygon2D::from_ring({{0, 0}, {5, 0}, {5, 5}, {0, 5}}), 10.0, {}, {}, {}});

    Isosurface ok{0.0, 1.0, std::string("b1")};
    CHECK(validate_instance(ok, model).empty());

    Isosurface dangling{0.0, 1.0, std::string("ghost")};
    CHECK(validate_instance(dangling, model).size() == 1);

    Isosurface unbound{0.0, 1.0, std::nullopt};
    CHECK(validate_instance(unbound, model).empty());

    Isosurface inverted{2.0, 1.0, std::nullopt};  // min above max
    CHECK(validate_instance(inverted, model).size() == 1);
}
