#include "aircanyon/aq_ontology.hpp"

#include <algorithm>
#include <array>

#include "aircanyon/errors.hpp"

namespace aircanyon::aq {

namespace {

template <typename E, std::size_t N>
std::optional<E> from_token_impl(const std::array<std::string_view, N>& tokens,
                                 std::string_view token) {
    for (std::size_t i = 0; i < N; ++i) {
        if (tokens[i] == token) return static_cast<E>(i);
    }
    return std::nullopt;
}

constexpr std::array<std::string_view, 3> kCanyonShape{"wide", "square", "narrow"};
constexpr std::array<std::string_view, 3> kCanyonLevel{"street-level", "building-level",
                                                       "roof-level"};
constexpr std::array<std::string_view, 3> kPollutantOrigin{"traffic-related", "chemical toxics",
                                                           "biological toxics"};
constexpr std::array<std::string_view, 2> kReactivity{"reactive", "non-reactive"};
constexpr std::array<std::string_view, 2> kSourceLocation{"street-level", "advected"};
constexpr std::array<std::string_view, 2> kEmissionRate{"continuous", "non-continuous"};
constexpr std::array<std::string_view, 3> kFlowRegime{"isolated-roughness", "wake-interference",
                                                      "skimming"};
constexpr std::array<std::string_view, 2> kVortexIntensity{"weak", "strong"};
constexpr std::array<std::string_view, 2> kRotationDirection{"clockwise", "counter-clockwise"};
constexpr std::array<std::string_view, 2> kVortexOrigin{"mechanically induced",
                                                        "thermally induced"};
constexpr std::array<std::string_view, 3> kVortexShape{"portal", "roll-type", "horseshoe"};
constexpr std::array<std::string_view, 2> kSideRef{"side_1", "side_2"};

}  // namespace

std::string_view to_token(CanyonShape v) { return kCanyonShape[static_cast<int>(v)]; }
std::string_view to_token(CanyonLevel v) { return kCanyonLevel[static_cast<int>(v)]; }
std::string_view to_token(PollutantOrigin v) { return kPollutantOrigin[static_cast<int>(v)]; }
std::string_view to_token(Reactivity v) { return kReactivity[static_cast<int>(v)]; }
std::string_view to_token(SourceLocation v) { return kSourceLocation[static_cast<int>(v)]; }
std::string_view to_token(EmissionRate v) { return kEmissionRate[static_cast<int>(v)]; }
std::string_view to_token(FlowRegime v) { return kFlowRegime[static_cast<int>(v)]; }
std::string_view to_token(VortexIntensity v) { return kVortexIntensity[static_cast<int>(v)]; }
std::string_view to_token(RotationDirection v) { return kRotationDirection[static_cast<int>(v)]; }
std::string_view to_token(VortexOrigin v) { return kVortexOrigin[static_cast<int>(v)]; }
std::string_view to_token(VortexShape v) { return kVortexShape[static_cast<int>(v)]; }
std::string_view to_token(SideRef v) { return kSideRef[static_cast<int>(v)]; }

std::optional<CanyonShape> canyon_shape_from_token(std::string_view t) {
    return from_token_impl<CanyonShape>(kCanyonShape, t);
}
std::optional<CanyonLevel> canyon_level_from_token(std::string_view t) {
    return from_token_impl<CanyonLevel>(kCanyonLevel, t);
}
std::optional<PollutantOrigin> pollutant_origin_from_token(std::string_view t) {
    return from_token_impl<PollutantOrigin>(kPollutantOrigin, t);
}
std::optional<Reactivity> reactivity_from_token(std::string_view t) {
    return from_token_impl<Reactivity>(kReactivity, t);
}
std::optional<SourceLocation> source_location_from_token(std::string_view t) {
    return from_token_impl<SourceLocation>(kSourceLocation, t);
}
std::optional<EmissionRate> emission_rate_from_token(std::string_view t) {
    return from_token_impl<EmissionRate>(kEmissionRate, t);
}
std::optional<FlowRegime> flow_regime_from_token(std::string_view t) {
    return from_token_impl<FlowRegime>(kFlowRegime, t);
}
std::optional<VortexIntensity> vortex_intensity_from_token(std::string_view t) {
    return from_token_impl<VortexIntensity>(kVortexIntensity, t);
}
std::optional<RotationDirection> rotation_direction_from_token(std::string_view t) {
    return from_token_impl<RotationDirection>(kRotationDirection, t);
}
std::optional<VortexOrigin> vortex_origin_from_token(std::string_view t) {
    return from_token_impl<VortexOrigin>(kVortexOrigin, t);
}
std::optional<VortexShape> vortex_shape_from_token(std::string_view t) {
    return from_token_impl<VortexShape>(kVortexShape, t);
}

namespace {

struct EnumEntry {
    std::string_view name;
    const std::string_view* begin;
    std::size_t count;
};

const std::array<EnumEntry, 11> kRegistry{{
    {"canyon_shape", kCanyonShape.data(), kCanyonShape.size()},
    {"canyon_level", kCanyonLevel.data(), kCanyonLevel.size()},
    {"pollutant_origin", kPollutantOrigin.data(), kPollutantOrigin.size()},
    {"reactivity", kReactivity.data(), kReactivity.size()},
    {"source_location", kSourceLocation.data(), kSourceLocation.size()},
    {"emission_rate", kEmissionRate.data(), kEmissionRate.size()},
    {"flow_regime", kFlowRegime.data(), kFlowRegime.size()},
    {"vortex_intensity", kVortexIntensity.data(), kVortexIntensity.size()},
    {"rotation_direction", kRotationDirection.data(), kRotationDirection.size()},
    {"vortex_origin", kVortexOrigin.data(), kVortexOrigin.size()},
    {"vortex_shape", kVortexShape.data(), kVortexShape.size()},
}};

}  // namespace

std::vector<std::string_view> enum_tokens(std::string_view enum_name) {
    for (const auto& e : kRegistry) {
        if (e.name == enum_name) return {e.begin, e.begin + e.count};
    }
    return {};
}

std::vector<std::string_view> enum_names() {
    std::vector<std::string_view> out;
    out.reserve(kRegistry.size());
    for (const auto& e : kRegistry) out.push_back(e.name);
    return out;
}

std::vector<ValidationFinding> validate_enum_token(std::string_view enum_name,
                                                   std::string_view token) {
    auto tokens = enum_tokens(enum_name);
    if (tokens.empty()) {
        return {{std::string(enum_name), "unknown enumeration"}};
    }
    if (std::find(tokens.begin(), tokens.end(), token) == tokens.end()) {
        return {{std::string(enum_name),
                 "token '" + std::string(token) + "' is not in the closed enumeration"}};
    }
    return {};
}

CanyonShape classify_canyon_shape(double hw_ratio, const ShapeThresholds& t) {
    if (!(hw_ratio > 0.0)) throw DomainError("height-to-width ratio must be > 0");
    if (hw_ratio < t.wide_max) return CanyonShape::Wide;
    if (hw_ratio > t.narrow_min) return CanyonShape::Narrow;
    return CanyonShape::Square;
}

std::vector<ValidationFinding> validate_instance(const AqStreet& s) {
    std::vector<ValidationFinding> f;
    if (!(s.width > 0.0)) f.push_back({"", "street width must be > 0"});
    if (s.albedo < 0.0 || s.albedo > 1.0) f.push_back({"", "albedo must be in [0, 1]"});
    if (s.orientation < 0.0 || s.orientation >= 180.0) {
        f.push_back({"", "orientation must be in [0, 180)"});
    }
    return f;
}

std::vector<ValidationFinding> validate_instance(const AqBuilding& b) {
    std::vector<ValidationFinding> f;
    if (!(b.height > 0.0)) f.push_back({"", "building height must be > 0"});
    if (b.albedo < 0.0 || b.albedo > 1.0) f.push_back({"", "albedo must be in [0, 1]"});
    if (b.roof_slope && (*b.roof_slope < 0.0 || *b.roof_slope > 90.0)) {
        f.push_back({"", "roof slope must be in [0, 90]"});
    }
    return f;
}

std::vector<ValidationFinding> validate_instance(const AqStreetCanyon& c) {
    std::vector<ValidationFinding> f;
    if (!(c.height_to_width_ratio > 0.0)) {
        f.push_back({"", "height-to-width ratio must be > 0"});
    }
    if (!(c.height_to_height_ratio > 0.0)) {
        f.push_back({"", "height-to-height ratio must be > 0"});
    }
    if (c.orientation < 0.0 || c.orientation >= 180.0) {
        f.push_back({"", "orientation must be in [0, 180)"});
    }
    return f;
}

std::vector<ValidationFinding> validate_instance(const AmbientWindConditions& w) {
    std::vector<ValidationFinding> f;
    if (w.speed < 0.0) f.push_back({"", "wind speed must be >= 0"});
    if (w.direction_from < 0.0 || w.direction_from >= 360.0) {
        f.push_back({"", "wind direction must be in [0, 360)"});
    }
    if (w.turbulence_intensity && *w.turbulence_intensity < 0.0) {
        f.push_back({"", "turbulence intensity must be >= 0"});
    }
    return f;
}

std::vector<ValidationFinding> validate_instance(const ThermalConditions& t) {
    std::vector<ValidationFinding> f;
    auto check_temp = [&](const std::optional<double>& v, const char* name) {
        if (v && !(*v > 0.0)) f.push_back({"", std::string(name) + " must be > 0 K"});
    };
    check_temp(t.t_air, "t_air");
    check_temp(t.t_street_bottom, "t_street_bottom");
    check_temp(t.t_leeward_wall, "t_leeward_wall");
    check_temp(t.t_windward_wall, "t_windward_wall");
    if (t.sunshine_duration && *t.sunshine_duration < 0.0) {
        f.push_back({"", "sunshine duration must be >= 0"});
    }
    return f;
}

std::vector<ValidationFinding> validate_instance(const PollutantSource& p) {
    std::vector<ValidationFinding> f;
    if (p.emitted_product.empty()) f.push_back({"", "emitted product must be named"});
    return f;
}

std::vector<ValidationFinding> validate_instance(const Flow& flow) {
    std::vector<ValidationFinding> f;
    // Field values are categorical only; nothing numeric to check beyond the
    // vortex enums, which the type system already closes.
    (void)flow;
    return f;
}

std::vector<ValidationFinding> validate_instance(const Isosurface& iso, const CityModel& model) {
    std::vector<ValidationFinding> f;
    if (iso.value_max < iso.value_min) {
        f.push_back({"", "isosurface value range is inverted"});
    }
    if (iso.geometry_ref) {
        bool found = false;
        for (const auto& b : model.buildings) {
            if (b.id == *iso.geometry_ref) found = true;
        }
        for (const auto& s : model.streets) {
            if (s.id == *iso.geometry_ref) found = true;
        }
        if (!found) {
            f.push_back({*iso.geometry_ref,
                         "isosurface geometry reference does not resolve in the city model"});
        }
    }
    return f;
}

}  // namespace aircanyon::aq
