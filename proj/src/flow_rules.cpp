#include "aircanyon/flow_rules.hpp"

#include <cmath>

#include "aircanyon/errors.hpp"

namespace aircanyon::flow {

namespace {
constexpr double kPi = 3.14159265358979323846;
// Unit-vector cross components below this are numeric noise, not a real
// cross-canyon wind (a hundredth of a degree of obliquity already gives
// roughly 2e-4).
constexpr double kCrossComponentTol = 1e-9;
}  // namespace

double relative_wind_angle(const aq::AmbientWindConditions& wind, double street_orientation) {
    double x = std::fmod(std::abs(wind.direction_from - street_orientation), 180.0);
    return std::min(x, 180.0 - x);
}

std::optional<WindContext> wind_side_context(const oupp::OuppStreetCanyon& canyon,
                                             const aq::AmbientWindConditions& wind) {
    double rel = relative_wind_angle(wind, canyon.in_aq.orientation);
    if (rel <= 0.0) return std::nullopt;

    // Cross-canyon component of the "from" unit vector. side_1 sits at
    // negative cross(axis, centroid - origin), i.e. negative offset along
    // perp(axis); side_2 at positive offset.
    double r = wind.direction_from * kPi / 180.0;
    geom::Vec2 from_unit{std::sin(r), std::cos(r)};
    double w = geom::dot(from_unit, geom::perp(canyon.axis.direction));
    if (std::abs(w) < kCrossComponentTol) return std::nullopt;

    WindContext ctx;
    ctx.relative_angle = rel;
    ctx.upwind_side = w > 0.0 ? aq::SideRef::Side2 : aq::SideRef::Side1;
    ctx.downwind_side = w > 0.0 ? aq::SideRef::Side1 : aq::SideRef::Side2;
    return ctx;
}

std::optional<WindContext> assign_sides(oupp::OuppStreetCanyon& canyon,
                                        const aq::AmbientWindConditions& wind) {
    auto ctx = wind_side_context(canyon, wind);
    if (!ctx) {
        canyon.in_aq.windward_side.reset();
        canyon.in_aq.leeward_side.reset();
        return std::nullopt;
    }
    // The canyon's windward side is the inner face of the downwind row, the
    // leeward side the inner face of the upwind row.
    canyon.in_aq.windward_side = ctx->downwind_side;
    canyon.in_aq.leeward_side = ctx->upwind_side;
    return ctx;
}

aq::FlowRegime classify_flow_regime(double hw_ratio, const FlowRuleConfig& cfg) {
    if (hw_ratio < cfg.isolated_max) return aq::FlowRegime::IsolatedRoughness;
    if (hw_ratio < cfg.wake_max) return aq::FlowRegime::WakeInterference;
    return aq::FlowRegime::Skimming;
}

aq::Flow derive_vortices(const oupp::OuppStreetCanyon& canyon,
                         const aq::MeteorologicalConditions& met, const FlowRuleConfig& cfg) {
    aq::Flow flow;
    double hw = canyon.in_aq.height_to_width_ratio;
    flow.regime = classify_flow_regime(hw, cfg);

    double rel = relative_wind_angle(met.wind, canyon.in_aq.orientation);
    if (flow.regime != aq::FlowRegime::Skimming || rel < cfg.perpendicular_min) {
        return flow;  // no canyon-trapped circulation
    }

    aq::VortexIntensity intensity = met.wind.speed >= cfg.strong_intensity_min
                                        ? aq::VortexIntensity::Strong
                                        : aq::VortexIntensity::Weak;
    bool two_cells = hw >= cfg.two_vortex_min;

    // Section frame with the wind travelling left to right: the primary roll
    // turns clockwise; in deep canyons a counter-rotating cell forms beneath.
    aq::Vortex primary;
    primary.intensity = intensity;
    primary.rotation_direction = aq::RotationDirection::Clockwise;
    primary.location = two_cells ? aq::CanyonLevel::BuildingLevel : aq::CanyonLevel::StreetLevel;
    primary.origin = aq::VortexOrigin::MechanicallyInduced;
    primary.shape = aq::VortexShape::RollType;
    flow.vortices.push_back(primary);

    if (two_cells) {
        aq::Vortex secondary = primary;
        secondary.rotation_direction = aq::RotationDirection::CounterClockwise;
        secondary.location = aq::CanyonLevel::StreetLevel;
        flow.vortices.push_back(secondary);
    }

    if (met.thermal && met.thermal->t_street_bottom && met.thermal->t_air &&
        *met.thermal->t_street_bottom - *met.thermal->t_air >= cfg.thermal_delta_min) {
        aq::Vortex thermal;
        thermal.intensity = intensity;
        thermal.rotation_direction = aq::RotationDirection::Clockwise;
        thermal.location = aq::CanyonLevel::StreetLevel;
        thermal.origin = aq::VortexOrigin::ThermallyInduced;
        flow.vortices.push_back(thermal);
    }
    return flow;
}

std::string_view to_token(AdvisoryAbsence reason) {
    return reason == AdvisoryAbsence::NotScfus ? "not-SCFUS" : "no-cross-wind";
}

AdvisoryResult dispersion_advisory(const oupp::OuppStreetCanyon& canyon,
                                   const std::optional<WindContext>& ctx) {
    if (!oupp::classify_scfus(canyon)) {
        return {std::nullopt, AdvisoryAbsence::NotScfus};
    }
    if (!ctx) {
        return {std::nullopt, AdvisoryAbsence::NoCrossWind};
    }
    Advisory a;
    a.lower_region_hotspot = ctx->downwind_side;
    a.upper_region_hotspot = ctx->upwind_side;
    a.recommendation = "cycle path on upwind side";
    a.source = "Baik & Kim 2002";
    return {a, std::nullopt};
}

}  // namespace aircanyon::flow
