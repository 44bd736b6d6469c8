#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "aircanyon/aq_ontology.hpp"
#include "aircanyon/geom_core.hpp"

namespace aircanyon::oupp {

// One derived value and where it came from.
struct ProvenanceEntry {
    std::string field;
    std::string operation;
    std::vector<std::string> sources;  // ids of the CG objects consumed
};

// Binds one AQ street to the CG street it was derived from.
struct OuppStreet {
    std::string id;
    aq::AqStreet in_aq;
    std::string in_cg;  // CgStreet id
    std::vector<ProvenanceEntry> provenance;
};

// AQ building bound to its CG source.
struct OuppBuilding {
    std::string id;
    aq::AqBuilding in_aq;
    std::string in_cg;  // CgBuilding id
    std::vector<ProvenanceEntry> provenance;
};

// A street canyon: a CG street bordered on both sides by continuously
// aligned building rows, with the derived AQ instance attached.
struct OuppStreetCanyon {
    std::string id;
    aq::AqStreetCanyon in_aq;
    std::string street;                    // CgStreet id
    std::vector<std::string> buildings_1;  // row with the smaller signed cross product
    std::vector<std::string> buildings_2;

    // Cached derivations used by downstream classification.
    double avg_height_1 = 0.0;
    double avg_height_2 = 0.0;
    double street_width_m = 0.0;
    StreetAxis axis;
    geom::Point2 side_1_centroid;
    geom::Point2 side_2_centroid;

    std::vector<ProvenanceEntry> provenance;
};

struct DeriveConfig {
    GeoConfig geo;
    aq::ShapeThresholds shape;
};

// Pattern-1 derivation: width, orientation, albedo and location of the AQ
// street computed from the CG geometry.
OuppStreet derive_aq_street(const CgStreet& street, const GeoConfig& cfg,
                            const AlbedoTable& table);

// Pattern-1 derivation for buildings: height copied, roof slope from the roof
// surfaces (absent for flat-roof sources), albedo via the fallback ladder.
OuppBuilding derive_aq_building(const CgBuilding& building, const AlbedoTable& table);

// Pattern-2 extraction: emits one canyon per street whose bordering buildings
// split into two non-empty, continuously aligned rows. Deterministic: output
// ordered by street id. Streets failing the predicates yield no canyon.
std::vector<OuppStreetCanyon> extract_street_canyons(const CityModel& model,
                                                     const DeriveConfig& cfg);

// Height-to-height ratio. Without wind: avg(buildings_1) / avg(buildings_2)
// as stored. With wind: windward-side average over leeward-side average, the
// sides resolved against the given wind (falls back to the stored order when
// the wind runs along the canyon). Throws DomainError on an empty side.
double compute_hh_ratio(const OuppStreetCanyon& canyon,
                        const std::optional<aq::MeteorologicalConditions>& met);

// Street canyon with favourable upwind side:
// 0.9 < H/H < 1.1 and 1.9 < H/W < 2.1, both strict.
bool classify_scfus(const OuppStreetCanyon& canyon);

// A street is potentially polluted when its canyon's derived flow contains
// one or more vortices.
bool classify_potentially_polluted(const OuppStreetCanyon& canyon, const aq::Flow& flow);

// Centralized store for interconnection instances. Built single-writer, then
// read-only for queries.
class KnowledgeBase {
public:
    explicit KnowledgeBase(CityModel model);

    const CityModel& city() const { return city_; }

    // Throw ValidationError when a reference does not resolve against the
    // city model. Return the asserted instance id.
    std::string assert_street(OuppStreet street);
    std::string assert_building(OuppBuilding building);
    std::string assert_canyon(OuppStreetCanyon canyon);

    const std::vector<OuppStreet>& streets() const { return streets_; }
    const std::vector<OuppBuilding>& buildings() const { return buildings_; }
    const std::vector<OuppStreetCanyon>& canyons() const { return canyons_; }

    std::vector<const OuppStreetCanyon*> query_canyons(
        const std::function<bool(const OuppStreetCanyon&)>& predicate) const;
    std::vector<const OuppStreet*> query_streets(
        const std::function<bool(const OuppStreet&)>& predicate) const;

    const CgStreet* find_street(const std::string& id) const;
    const CgBuilding* find_building(const std::string& id) const;

private:
    CityModel city_;
    std::vector<OuppStreet> streets_;
    std::vector<OuppBuilding> buildings_;
    std::vector<OuppStreetCanyon> canyons_;
};

}  // namespace aircanyon::oupp
