#pragma once

#include <istream>
#include <string>
#include <vector>

#include "aircanyon/city_model.hpp"

namespace aircanyon {

struct ParsedCity {
    CityModel model;
    // One entry per skipped unknown element or ignored attribute.
    std::vector<std::string> warnings;
};

// Parses the CityGML-lite XML subset:
//   CityModel / cityObjectMember / (Building | Road)
// Building: measuredHeight, lod1Footprint/.../posList, optional
// boundedBy/RoofSurface, wallMaterial, wallColor.
// Road: lod1Surface/.../posList or centerLine/posList + nominalWidth.
// Namespace prefixes on element names are ignored. Unknown elements are
// skipped with a warning. Throws ParseError (malformed XML, with line
// number) or ValidationError (missing measuredHeight, degenerate ring, ...).
ParsedCity parse_citygml(std::istream& document, const std::string& source_name = "");

// Parses the JSON twin encoding: one document
//   { "buildings": [...], "streets": [...] }
// field-for-field equal to the XML subset. Throws ParseError (bad JSON) or
// ValidationError with the offending JSON path.
ParsedCity parse_cityjson_lite(std::istream& document, const std::string& source_name = "");

}  // namespace aircanyon
