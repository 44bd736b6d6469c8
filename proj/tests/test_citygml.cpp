#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "aircanyon/citygml.hpp"
#include "aircanyon/errors.hpp"

using namespace aircanyon;

namespace {

std::ifstream fixture(const std::string& name) {
    std::ifstream f(std::string(AIRCANYON_FIXTURE_DIR) + "/" + name);
    REQUIRE(f.good());
    return f;
}

}  // namespace

TEST_CASE("single building document round-trips the stated fields") {
    std::istringstream doc(R"(<?xml version="1.0"?>
<CityModel>
  <cityObjectMember>
    <Building id="b1">
      <measuredHeight>80</measuredHeight>
      <lod1Footprint><Polygon><exterior><LinearRing>
        <posList>0 0 0 20 0 0 20 30 0 0 30 0 0 0 0</posList>
      </LinearRing></exterior></Polygon></lod1Footprint>
      <wallMaterial>concrete</wallMaterial>
      <wallColor>200 180 160</wallColor>
    </Building>
  </cityObjectMember>
</CityModel>)");
    auto parsed = parse_citygml(doc, "inline");
    REQUIRE(parsed.model.buildings.size() == 1);
    const auto& b = parsed.model.buildings[0];
    CHECK(b.id == "b1");
    CHECK(b.measured_height == doctest::Approx(80.0));
    CHECK(b.footprint.area() == doctest::Approx(600.0));
    CHECK(b.footprint.edge_count() == 4);
    REQUIRE(b.wall_material.has_value());
    CHECK(*b.wall_material == "concrete");
    REQUIRE(b.wall_color.has_value());
    CHECK((*b.wall_color)[0] == 200);
    CHECK(parsed.model.streets.empty());
    CHECK(parsed.warnings.empty());
}

TEST_CASE("empty CityModel yields an empty model") {
    std::istringstream doc("<CityModel></CityModel>");
    auto parsed = parse_citygml(doc);
    CHECK(parsed.model.buildings.empty());
    CHECK(parsed.model.streets.empty());
}

TEST_CASE("namespace prefixes are stripped") {
    std::istringstream doc(R"(<core:CityModel xmlns:core="x" xmlns:bldg="y" xmlns:gml="z">
  <core:cityObjectMember>
    <bldg:Building id="b1">
      <bldg:measuredHeight>12</bldg:measuredHeight>
      <bldg:lod1Footprint><gml:Polygon><gml:exterior><gml:LinearRing>
        <gml:posList>0 0 0 5 0 0 5 5 0 0 5 0</gml:posList>
      </gml:LinearRing></gml:exterior></gml:Polygon></bldg:lod1Footprint>
    </bldg:Building>
  </core:cityObjectMember>
</core:CityModel>)");
    auto parsed = parse_citygml(doc);
    REQUIRE(parsed.model.buildings.size() == 1);
    CHECK(parsed.model.buildings[0].measured_height == doctest::Approx(12.0));
}

TEST_CASE("roads parse in both geometric forms") {
    std::istringstream doc(R"(<CityModel>
  <cityObjectMember>
    <Road id="r1">
      <name>High Street</name>
      <lod1Surface><Polygon><exterior><LinearRing>
        <posList>0 0 0 10 0 0 10 100 0 0 100 0</posList>
      </LinearRing></exterior></Polygon></lod1Surface>
    </Road>
  </cityObjectMember>
  <cityObjectMember>
    <Road id="r2">
      <centerLine><posList>0 0 0 0 50 0 0 120 0</posList></centerLine>
      <nominalWidth>8</nominalWidth>
    </Road>
  </cityObjectMember>
</CityModel>)");
    auto parsed = parse_citygml(doc);
    REQUIRE(parsed.model.streets.size() == 2);
    CHECK(parsed.model.streets[0].is_surface());
    CHECK(*parsed.model.streets[0].name == "High Street");
    CHECK_FALSE(parsed.model.streets[1].is_surface());
    CHECK(parsed.model.streets[1].centerline().width == doctest::Approx(8.0));
    CHECK(parsed.model.streets[1].centerline().polyline.size() == 3);
}

TEST_CASE("roof surfaces keep their 3D rings") {
    std::istringstream doc(R"(<CityModel>
  <cityObjectMember>
    <Building id="b1">
      <measuredHeight>10</measuredHeight>
      <lod1Footprint><Polygon><exterior><LinearRing>
        <posList>0 0 0 10 0 0 10 10 0 0 10 0</posList>
      </LinearRing></exterior></Polygon></lod1Footprint>
      <boundedBy><RoofSurface><lod2MultiSurface><Polygon><exterior><LinearRing>
        <posList>0 0 10 10 0 10 10 10 15 0 10 15</posList>
      </LinearRing></exterior></Polygon></lod2MultiSurface></RoofSurface></boundedBy>
    </Building>
  </cityObjectMember>
</CityModel>)");
    auto parsed = parse_citygml(doc);
    REQUIRE(parsed.model.buildings.size() == 1);
    REQUIRE(parsed.model.buildings[0].roof_surfaces.size() == 1);
    CHECK(parsed.model.buildings[0].roof_surfaces[0].ring().size() >= 4);
}

TEST_CASE("malformed XML raises ParseError with a line number") {
    std::istringstream doc("<CityModel>\n<cityObjectMember>\n</CityModel>");
    CHECK_THROWS_AS(parse_citygml(doc), ParseError);
}

TEST_CASE("missing measuredHeight raises ValidationError naming the object") {
    std::istringstream doc(R"(<CityModel><cityObjectMember>
    <Building id="b-broken">
      <lod1Footprint><Polygon><exterior><LinearRing>
        <posList>0 0 0 5 0 0 5 5 0 0 5 0</posList>
      </LinearRing></exterior></Polygon></lod1Footprint>
    </Building>
  </cityObjectMember></CityModel>)");
    try {
        parse_citygml(doc);
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(e.object_id() == "b-broken");
    }
}

TEST_CASE("degenerate footprint ring raises ValidationError") {
    std::istringstream doc(R"(<CityModel><cityObjectMember>
    <Building id="b1">
      <measuredHeight>5</measuredHeight>
      <lod1Footprint><Polygon><exterior><LinearRing>
        <posList>0 0 0 5 0 0</posList>
      </LinearRing></exterior></Polygon></lod1Footprint>
    </Building>
  </cityObjectMember></CityModel>)");
    CHECK_THROWS_AS(parse_citygml(doc), ValidationError);
}

TEST_CASE("unknown elements produce warnings, not failures") {
    std::istringstream doc(R"(<CityModel>
  <cityObjectMember>
    <WaterBody id="w1"><wet>true</wet></WaterBody>
  </cityObjectMember>
  <cityObjectMember>
    <Building id="b1">
      <measuredHeight>9</measuredHeight>
      <mysteryTag>???</mysteryTag>
      <lod1Footprint><Polygon><exterior><LinearRing>
        <posList>0 0 0 6 0 0 6 6 0 0 6 0</posList>
      </LinearRing></exterior></Polygon></lod1Footprint>
    </Building>
  </cityObjectMember>
</CityModel>)");
    auto parsed = parse_citygml(doc);
    CHECK(parsed.model.buildings.size() == 1);
    CHECK(parsed.warnings.size() >= 2);
}

TEST_CASE("JSON twin: buildings and both street forms") {
    std::istringstream doc(R"({
      "buildings": [
        {"id": "b1", "footprint": [[0,0],[20,0],[20,30],[0,30],[0,0]],
         "measured_height": 80, "wall_material": "brick"}
      ],
      "streets": [
        {"id": "r1", "boundary": [[0,0],[10,0],[10,100],[0,100],[0,0]]},
        {"id": "r2", "centerline": [[0,0],[0,120]], "nominal_width": 8, "name": "Ring Rd"}
      ]
    })");
    auto parsed = parse_cityjson_lite(doc, "twin");
    REQUIRE(parsed.model.buildings.size() == 1);
    CHECK(parsed.model.buildings[0].footprint.area() == doctest::Approx(600.0));
    CHECK(*parsed.model.buildings[0].wall_material == "brick");
    REQUIRE(parsed.model.streets.size() == 2);
    CHECK(parsed.model.streets[0].is_surface());
    CHECK(parsed.model.streets[1].centerline().width == doctest::Approx(8.0));
    CHECK(*parsed.model.streets[1].name == "Ring Rd");
}

TEST_CASE("JSON twin: bad JSON is ParseError, bad values are ValidationError") {
    std::istringstream broken("{ not json");
    CHECK_THROWS_AS(parse_cityjson_lite(broken), ParseError);

    std::istringstream negative(R"({"buildings":[
      {"id":"b1","footprint":[[0,0],[5,0],[5,5],[0,5],[0,0]],"measured_height":-3}
    ],"streets":[]})");
    CHECK_THROWS_AS(parse_cityjson_lite(negative), ValidationError);
}

TEST_CASE("XML fixture and its JSON twin parse to field-identical models") {
    auto xml = fixture("canyon_80_40.gml");
    auto js = fixture("canyon_80_40.json");
    auto a = parse_citygml(xml, "gml").model;
    auto b = parse_cityjson_lite(js, "json").model;
    REQUIRE(a.buildings.size() == b.buildings.size());
    REQUIRE(a.streets.size() == b.streets.size());
    for (std::size_t i = 0; i < a.buildings.size(); ++i) {
        CHECK(a.buildings[i].id == b.buildings[i].id);
        CHECK(a.buildings[i].measured_height == b.buildings[i].measured_height);
        REQUIRE(a.buildings[i].footprint.ring().size() == b.buildings[i].footprint.ring().size());
        for (std::size_t k = 0; k < a.buildings[i].footprint.ring().size(); ++k) {
            CHECK(a.buildings[i].footprint.ring()[k].x == b.buildings[i].footprint.ring()[k].x);
            CHECK(a.buildings[i].footprint.ring()[k].y == b.buildings[i].footprint.ring()[k].y);
        }
    }
    for (std::size_t i = 0; i < a.streets.size(); ++i) {
        CHECK(a.streets[i].id == b.streets[i].id);
        CHECK(a.streets[i].name == b.streets[i].name);
        CHECK(a.streets[i].is_surface() == b.streets[i].is_surface());
    }
}

TEST_CASE("validate_model reports duplicates, bad heights and non-simple rings") {
    auto xml = fixture("canyon_80_40.gml");
    auto model = parse_citygml(xml).model;
    CHECK(validate_model(model).empty());

    CityModel dup = model;
    dup.buildings.push_back(dup.buildings.front());
    auto findings = validate_model(dup);
    REQUIRE(findings.size() == 1);
    CHECK(findings[0].object_id == model.buildings.front().id);

    CityModel bad = model;
    bad.buildings[0].measured_height = 0.0;
    CHECK(validate_model(bad).size() == 1);

    CityModel bowtie = model;
    bowtie.buildings[0].footprint =
        geom::Polygon2D::from_ring({{0, 0}, {10, 10}, {10, 0}, {0, 10}});
    auto f2 = validate_model(bowtie);
    REQUIRE(f2.size() == 1);
    CHECK(f2[0].object_id == bowtie.buildings[0].id);
}
