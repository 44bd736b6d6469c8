#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aircanyon/city_model.hpp"

namespace aircanyon::aq {

// ---- Closed enumerations -------------------------------------------------

enum class CanyonShape { Wide, Square, Narrow };
enum class CanyonLevel { StreetLevel, BuildingLevel, RoofLevel };
enum class PollutantOrigin { TrafficRelated, ChemicalToxics, BiologicalToxics };
enum class Reactivity { Reactive, NonReactive };
enum class SourceLocation { StreetLevel, Advected };
enum class EmissionRate { Continuous, NonContinuous };
enum class FlowRegime { IsolatedRoughness, WakeInterference, Skimming };
enum class VortexIntensity { Weak, Strong };
enum class RotationDirection { Clockwise, CounterClockwise };
enum class VortexOrigin { MechanicallyInduced, ThermallyInduced };
enum class VortexShape { Portal, RollType, Horseshoe };

std::string_view to_token(CanyonShape);
std::string_view to_token(CanyonLevel);
std::string_view to_token(PollutantOrigin);
std::string_view to_token(Reactivity);
std::string_view to_token(SourceLocation);
std::string_view to_token(EmissionRate);
std::string_view to_token(FlowRegime);
std::string_view to_token(VortexIntensity);
std::string_view to_token(RotationDirection);
std::string_view to_token(VortexOrigin);
std::string_view to_token(VortexShape);

std::optional<CanyonShape> canyon_shape_from_token(std::string_view);
std::optional<CanyonLevel> canyon_level_from_token(std::string_view);
std::optional<PollutantOrigin> pollutant_origin_from_token(std::string_view);
std::optional<Reactivity> reactivity_from_token(std::string_view);
std::optional<SourceLocation> source_location_from_token(std::string_view);
std::optional<EmissionRate> emission_rate_from_token(std::string_view);
std::optional<FlowRegime> flow_regime_from_token(std::string_view);
std::optional<VortexIntensity> vortex_intensity_from_token(std::string_view);
std::optional<RotationDirection> rotation_direction_from_token(std::string_view);
std::optional<VortexOrigin> vortex_origin_from_token(std::string_view);
std::optional<VortexShape> vortex_shape_from_token(std::string_view);

// Full token list of a named enumeration ("canyon_shape", "flow_regime",
// "pollutant_origin", ...). Empty for unknown names.
std::vector<std::string_view> enum_tokens(std::string_view enum_name);
std::vector<std::string_view> enum_names();

// Token-level closed-enum check for deserializers: one finding when the token
// is not in the named enumeration.
std::vector<ValidationFinding> validate_enum_token(std::string_view enum_name,
                                                   std::string_view token);

// ---- Domain instances ----------------------------------------------------

// Which building row of a canyon a wind-dependent role refers to.
enum class SideRef { Side1, Side2 };
std::string_view to_token(SideRef);

struct AqStreet {
    geom::Point2 location;     // absolute
    double width = 0.0;        // m, > 0
    double orientation = 0.0;  // degrees, [0, 180)
    double albedo = 0.0;       // [0, 1]
};

struct AqBuilding {
    geom::Point2 location;
    double height = 0.0;  // m, > 0
    std::optional<double> roof_slope;  // degrees, [0, 90]
    double albedo = 0.0;
};

struct AqStreetCanyon {
    CanyonShape shape = CanyonShape::Square;
    double height_to_width_ratio = 0.0;
    double height_to_height_ratio = 0.0;
    double orientation = 0.0;  // degrees, [0, 180)
    // Unset until wind conditions are supplied.
    std::optional<SideRef> leeward_side;
    std::optional<SideRef> windward_side;
    std::optional<CanyonLevel> level;
};

struct AmbientWindConditions {
    double speed = 0.0;           // m/s, >= 0
    double direction_from = 0.0;  // degrees, [0, 360), meteorological "from"
    std::optional<double> turbulence_intensity;  // >= 0
};

struct ThermalConditions {
    std::optional<double> sunshine_duration;  // hours
    std::optional<double> t_air;              // K
    std::optional<double> t_street_bottom;    // K
    std::optional<double> t_leeward_wall;     // K
    std::optional<double> t_windward_wall;    // K
};

struct MeteorologicalConditions {
    AmbientWindConditions wind;
    std::optional<ThermalConditions> thermal;
};

struct PollutantSource {
    std::string emitted_product;
    PollutantOrigin origin = PollutantOrigin::TrafficRelated;
    Reactivity reactivity = Reactivity::NonReactive;
    SourceLocation source_location = SourceLocation::StreetLevel;
    EmissionRate emission_rate = EmissionRate::Continuous;
    std::optional<std::string> dispersion_ref;  // id of a PollutantDispersionDistribution
};

struct Vortex {
    VortexIntensity intensity = VortexIntensity::Weak;
    RotationDirection rotation_direction = RotationDirection::Clockwise;
    CanyonLevel location = CanyonLevel::StreetLevel;
    VortexOrigin origin = VortexOrigin::MechanicallyInduced;
    std::optional<VortexShape> shape;  // no stated criteria; set only externally
};

// Categorical flow: structurally a vector field, but field values are absent
// by design. Carries only the regime and its vortices.
struct Flow {
    FlowRegime regime = FlowRegime::IsolatedRoughness;
    std::vector<Vortex> vortices;
};

struct Isosurface {
    double value_min = 0.0;
    double value_max = 0.0;
    // Resolves to a surface-bearing object in the CityModel when present.
    std::optional<std::string> geometry_ref;
};

struct ScalarField {
    std::vector<Isosurface> isosurfaces;
};

struct PollutantDispersionDistribution : ScalarField {
    std::optional<std::string> source_ref;  // id of a PollutantSource
};

// ---- Operations ------------------------------------------------------------

// H/W class thresholds; configurable, defaults follow common usage.
struct ShapeThresholds {
    double wide_max = 0.5;    // hw below this is wide
    double narrow_min = 1.5;  // hw above this is narrow
};

// wide if hw < wide_max; narrow if hw > narrow_min; square between
// (inclusive). Throws DomainError for non-positive ratios.
CanyonShape classify_canyon_shape(double hw_ratio, const ShapeThresholds& t = {});

std::vector<ValidationFinding> validate_instance(const AqStreet&);
std::vector<ValidationFinding> validate_instance(const AqBuilding&);
std::vector<ValidationFinding> validate_instance(const AqStreetCanyon&);
std::vector<ValidationFinding> validate_instance(const AmbientWindConditions&);
std::vector<ValidationFinding> validate_instance(const ThermalConditions&);
std::vector<ValidationFinding> validate_instance(const PollutantSource&);
std::vector<ValidationFinding> validate_instance(const Flow&);
// Referential check: geometry_ref, when present, must name an object in the
// city model.
std::vector<ValidationFinding> validate_instance(const Isosurface&, const CityModel& model);

}  // namespace aircanyon::aq
