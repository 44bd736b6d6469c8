#pragma once

#include <optional>
#include <string>
#include <variant>

#include "aircanyon/aq_ontology.hpp"
#include "aircanyon/oupp.hpp"

namespace aircanyon::flow {

// Thresholds behind the categorical flow rules. The regime and vortex
// enumerations come with no numeric bounds attached, so these are run
// configuration, not fixed constants.
struct FlowRuleConfig {
    double isolated_max = 0.30;        // H/W below this: isolated roughness
    double wake_max = 0.70;            // H/W below this: wake interference
    double two_vortex_min = 1.5;       // H/W at which a second vortex forms
    double strong_intensity_min = 5.0; // m/s; at or above: strong vortices
    double thermal_delta_min = 2.0;    // K; street-bottom minus air
    double perpendicular_min = 60.0;   // degrees; relative angle for canyon vortices
};

struct WindContext {
    double relative_angle = 0.0;  // degrees, [0, 90]
    aq::SideRef upwind_side = aq::SideRef::Side1;
    aq::SideRef downwind_side = aq::SideRef::Side2;
};

// Acute angle between the wind and the street axis: fold
// |direction_from - orientation| into [0, 180), then take min(x, 180 - x).
double relative_wind_angle(const aq::AmbientWindConditions& wind, double street_orientation);

// Side roles for a given wind, without touching the canyon. nullopt when the
// wind runs along the canyon (no cross-canyon component).
std::optional<WindContext> wind_side_context(const oupp::OuppStreetCanyon& canyon,
                                             const aq::AmbientWindConditions& wind);

// As wind_side_context, and additionally records the roles on the canyon's
// AQ instance: windward side = inner face of the downwind row, leeward side
// = inner face of the upwind row. Along-canyon wind leaves the sides unset.
std::optional<WindContext> assign_sides(oupp::OuppStreetCanyon& canyon,
                                        const aq::AmbientWindConditions& wind);

aq::FlowRegime classify_flow_regime(double hw_ratio, const FlowRuleConfig& cfg);

// Categorical vortex derivation. Skimming regime with near-perpendicular
// wind produces one mechanically induced roll vortex (clockwise in the
// section frame where the wind travels left to right), a counter-rotating
// second one beneath it for deep canyons, and a thermally induced
// street-level vortex when the street bottom is warmer than the air by the
// configured margin. All other regimes and near-parallel winds produce none.
aq::Flow derive_vortices(const oupp::OuppStreetCanyon& canyon,
                         const aq::MeteorologicalConditions& met, const FlowRuleConfig& cfg);

struct Advisory {
    aq::SideRef lower_region_hotspot;  // concentrations peak here near the ground
    aq::SideRef upper_region_hotspot;
    std::string recommendation;
    std::string source;
};

enum class AdvisoryAbsence { NotScfus, NoCrossWind };
std::string_view to_token(AdvisoryAbsence reason);

struct AdvisoryResult {
    std::optional<Advisory> advisory;
    std::optional<AdvisoryAbsence> reason;  // set iff advisory is absent
};

// Imported placement result for canyons with a favourable upwind side: the
// lower-region concentration peaks near the downwind building, so cycle
// paths belong on the upwind side. Requires SCFUS and a resolved cross wind.
AdvisoryResult dispersion_advisory(const oupp::OuppStreetCanyon& canyon,
                                   const std::optional<WindContext>& ctx);

}  // namespace aircanyon::flow
