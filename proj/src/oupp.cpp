#include "aircanyon/oupp.hpp"

#include <algorithm>
#include <unordered_set>

#include "aircanyon/errors.hpp"
#include "aircanyon/flow_rules.hpp"

namespace aircanyon::oupp {

OuppStreet derive_aq_street(const CgStreet& street, const GeoConfig& cfg,
                            const AlbedoTable& table) {
    StreetAxis axis = street_axis(street);
    OuppStreet out;
    out.id = "oupp-street:" + street.id;
    out.in_cg = street.id;
    out.in_aq.location = street_centroid(street);
    out.in_aq.width = street_width(street, axis, cfg);
    out.in_aq.orientation = axis.orientation_deg;
    out.in_aq.albedo = albedo(street, table);
    out.provenance = {
        {"width", "street_width", {street.id}},
        {"orientation", "street_axis", {street.id}},
        {"albedo", "albedo", {street.id}},
        {"location", "street_centroid", {street.id}},
    };
    return out;
}

OuppBuilding derive_aq_building(const CgBuilding& building, const AlbedoTable& table) {
    OuppBuilding out;
    out.id = "oupp-building:" + building.id;
    out.in_cg = building.id;
    out.in_aq.location = building.footprint.centroid();
    out.in_aq.height = building.measured_height;
    out.in_aq.roof_slope = roof_slope(building);
    out.in_aq.albedo = albedo(building, table);
    out.provenance = {
        {"height", "copy", {building.id}},
        {"roof_slope",
         out.in_aq.roof_slope ? "roof_slope" : "roof_slope (no roof surfaces, flat-roof assumption)",
         {building.id}},
        {"albedo", "albedo", {building.id}},
        {"location", "footprint_centroid", {building.id}},
    };
    return out;
}

namespace {

geom::Point2 mean_centroid(const std::vector<const CgBuilding*>& row) {
    geom::Point2 acc{0.0, 0.0};
    for (const CgBuilding* b : row) acc = acc + b->footprint.centroid();
    return acc * (1.0 / static_cast<double>(row.size()));
}

std::vector<std::string> ids_of(std::vector<const CgBuilding*> row) {
    std::sort(row.begin(), row.end(),
              [](const CgBuilding* a, const CgBuilding* b) { return a->id < b->id; });
    std::vector<std::string> ids;
    ids.reserve(row.size());
    for (const CgBuilding* b : row) ids.push_back(b->id);
    return ids;
}

}  // namespace

std::vector<OuppStreetCanyon> extract_street_canyons(const CityModel& model,
                                                     const DeriveConfig& cfg) {
    std::vector<const CgStreet*> streets;
    streets.reserve(model.streets.size());
    for (const auto& s : model.streets) streets.push_back(&s);
    std::sort(streets.begin(), streets.end(),
              [](const CgStreet* a, const CgStreet* b) { return a->id < b->id; });

    std::vector<OuppStreetCanyon> canyons;
    for (const CgStreet* street : streets) {
        StreetAxis axis;
        try {
            axis = street_axis(*street);
        } catch (const GeometryError&) {
            continue;  // degenerate street, no canyon
        }

        std::vector<const CgBuilding*> bordering;
        for (const auto& b : model.buildings) {
            if (borders(b, *street, cfg.geo)) bordering.push_back(&b);
        }
        if (bordering.empty()) continue;

        SideSplit split;
        try {
            split = split_sides(bordering, axis);
        } catch (const AmbiguityError&) {
            continue;  // a centroid exactly on the axis: no well-defined rows
        }
        if (split.side_1.empty() || split.side_2.empty()) continue;
        if (!continuously_aligned(split.side_1, *street, axis, cfg.geo)) continue;
        if (!continuously_aligned(split.side_2, *street, axis, cfg.geo)) continue;

        double width;
        try {
            width = street_width(*street, axis, cfg.geo);
        } catch (const GeometryError&) {
            continue;
        }

        OuppStreetCanyon c;
        c.id = "canyon:" + street->id;
        c.street = street->id;
        c.buildings_1 = ids_of(split.side_1);
        c.buildings_2 = ids_of(split.side_2);
        c.avg_height_1 = average_height(split.side_1);
        c.avg_height_2 = average_height(split.side_2);
        c.street_width_m = width;
        c.axis = axis;
        c.side_1_centroid = mean_centroid(split.side_1);
        c.side_2_centroid = mean_centroid(split.side_2);

        c.in_aq.height_to_height_ratio = c.avg_height_1 / c.avg_height_2;
        c.in_aq.height_to_width_ratio = 0.5 * (c.avg_height_1 + c.avg_height_2) / width;
        c.in_aq.shape = aq::classify_canyon_shape(c.in_aq.height_to_width_ratio, cfg.shape);
        c.in_aq.orientation = axis.orientation_deg;

        std::vector<std::string> all_ids = c.buildings_1;
        all_ids.insert(all_ids.end(), c.buildings_2.begin(), c.buildings_2.end());
        c.provenance = {
            {"height_to_height_ratio", "average_height ratio", all_ids},
            {"height_to_width_ratio", "mean side height / street_width", all_ids},
            {"shape", "classify_canyon_shape", {street->id}},
            {"orientation", "street_axis", {street->id}},
            {"street_width", "street_width", {street->id}},
        };
        canyons.push_back(std::move(c));
    }
    return canyons;
}

double compute_hh_ratio(const OuppStreetCanyon& canyon,
                        const std::optional<aq::MeteorologicalConditions>& met) {
    if (canyon.buildings_1.empty() || canyon.buildings_2.empty()) {
        throw DomainError("height-to-height ratio needs buildings on both sides");
    }
    if (met) {
        if (auto ctx = flow::wind_side_context(canyon, met->wind)) {
            // Windward side is the downwind row: its height goes on top.
            double windward = ctx->downwind_side == aq::SideRef::Side1 ? canyon.avg_height_1
                                                                       : canyon.avg_height_2;
            double leeward = ctx->upwind_side == aq::SideRef::Side1 ? canyon.avg_height_1
                                                                    : canyon.avg_height_2;
            return windward / leeward;
        }
    }
    return canyon.avg_height_1 / canyon.avg_height_2;
}

bool classify_scfus(const OuppStreetCanyon& canyon) {
    double hh = canyon.in_aq.height_to_height_ratio;
    double hw = canyon.in_aq.height_to_width_ratio;
    return 0.9 < hh && hh < 1.1 && 1.9 < hw && hw < 2.1;
}

bool classify_potentially_polluted(const OuppStreetCanyon& /*canyon*/, const aq::Flow& flow) {
    return !flow.vortices.empty();
}

KnowledgeBase::KnowledgeBase(CityModel model) : city_(std::move(model)) {}

const CgStreet* KnowledgeBase::find_street(const std::string& id) const {
    for (const auto& s : city_.streets) {
        if (s.id == id) return &s;
    }
    return nullptr;
}

const CgBuilding* KnowledgeBase::find_building(const std::string& id) const {
    for (const auto& b : city_.buildings) {
        if (b.id == id) return &b;
    }
    return nullptr;
}

std::string KnowledgeBase::assert_street(OuppStreet street) {
    if (!find_street(street.in_cg)) {
        throw ValidationError("dangling street reference", street.in_cg);
    }
    if (street.provenance.empty()) {
        throw ValidationError("derived street has no provenance", street.id);
    }
    streets_.push_back(std::move(street));
    return streets_.back().id;
}

std::string KnowledgeBase::assert_building(OuppBuilding building) {
    if (!find_building(building.in_cg)) {
        throw ValidationError("dangling building reference", building.in_cg);
    }
    if (building.provenance.empty()) {
        throw ValidationError("derived building has no provenance", building.id);
    }
    buildings_.push_back(std::move(building));
    return buildings_.back().id;
}

std::string KnowledgeBase::assert_canyon(OuppStreetCanyon canyon) {
    if (!find_street(canyon.street)) {
        throw ValidationError("dangling street reference", canyon.street);
    }
    for (const auto& list : {canyon.buildings_1, canyon.buildings_2}) {
        for (const auto& id : list) {
            if (!find_building(id)) throw ValidationError("dangling building reference", id);
        }
    }
    if (canyon.provenance.empty()) {
        throw ValidationError("derived canyon has no provenance", canyon.id);
    }
    canyons_.push_back(std::move(canyon));
    return canyons_.back().id;
}

std::vector<const OuppStreetCanyon*> KnowledgeBase::query_canyons(
    const std::function<bool(const OuppStreetCanyon&)>& predicate) const {
    std::vector<const OuppStreetCanyon*> out;
    for (const auto& c : canyons_) {
        if (predicate(c)) out.push_back(&c);
    }
    return out;
}

std::vector<const OuppStreet*> KnowledgeBase::query_streets(
    const std::function<bool(const OuppStreet&)>& predicate) const {
    std::vector<const OuppStreet*> out;
    for (const auto& s : streets_) {
        if (predicate(s)) out.push_back(&s);
    }
    return out;
}

}  // namespace aircanyon::oupp
