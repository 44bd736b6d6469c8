#include "aircanyon/citygml.hpp"

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>
#include <cmath>
#include <sstream>

#include "aircanyon/errors.hpp"

namespace aircanyon {

namespace pt = boost::property_tree;

namespace {

// Element names are matched on the local part; prefixes like "bldg:" are
// dropped so real-world namespaced documents still parse.
std::string local_name(const std::string& qname) {
    auto pos = qname.rfind(':');
    return pos == std::string::npos ? qname : qname.substr(pos + 1);
}

const pt::ptree* find_child(const pt::ptree& node, const std::string& name) {
    for (const auto& [key, child] : node) {
        if (local_name(key) == name) return &child;
    }
    return nullptr;
}

// Depth-first search for the first descendant element with the given local
// name (used for .../LinearRing/posList chains of varying depth).
const pt::ptree* find_descendant(const pt::ptree& node, const std::string& name) {
    for (const auto& [key, child] : node) {
        if (key == "<xmlattr>") continue;
        if (local_name(key) == name) return &child;
        if (const pt::ptree* found = find_descendant(child, name)) return found;
    }
    return nullptr;
}

void find_descendants(const pt::ptree& node, const std::string& name,
                      std::vector<const pt::ptree*>& out) {
    for (const auto& [key, child] : node) {
        if (key == "<xmlattr>") continue;
        if (local_name(key) == name) {
            out.push_back(&child);
        } else {
            find_descendants(child, name, out);
        }
    }
}

std::string object_id(const pt::ptree& node, const std::string& kind, std::size_t index) {
    if (const pt::ptree* attrs = find_child(node, "<xmlattr>")) {
        for (const auto& [key, value] : *attrs) {
            if (local_name(key) == "id") return value.data();
        }
    }
    throw ValidationError(kind + " #" + std::to_string(index) + " has no id attribute");
}

std::vector<geom::Point3> parse_pos_list(const std::string& text, const std::string& id) {
    std::istringstream in(text);
    std::vector<double> values;
    double v;
    while (in >> v) values.push_back(v);
    if (!in.eof()) throw ValidationError("posList contains a non-numeric token", id);
    if (values.empty() || values.size() % 3 != 0) {
        throw ValidationError("posList length is not a multiple of 3 (expected x y z triples)", id);
    }
    std::vector<geom::Point3> pts;
    pts.reserve(values.size() / 3);
    for (std::size_t i = 0; i < values.size(); i += 3) {
        if (!std::isfinite(values[i]) || !std::isfinite(values[i + 1]) ||
            !std::isfinite(values[i + 2])) {
            throw ValidationError("posList contains a non-finite coordinate", id);
        }
        pts.push_back({values[i], values[i + 1], values[i + 2]});
    }
    return pts;
}

std::vector<geom::Point2> drop_z(const std::vector<geom::Point3>& pts) {
    std::vector<geom::Point2> out;
    out.reserve(pts.size());
    for (const auto& p : pts) out.push_back({p.x, p.y});
    return out;
}

geom::Polygon2D ring_to_polygon(const std::vector<geom::Point3>& pts, const std::string& id) {
    try {
        return geom::Polygon2D::from_ring(drop_z(pts));
    } catch (const GeometryError& e) {
        throw ValidationError(std::string("degenerate ring: ") + e.what(), id);
    }
}

CgBuilding parse_building(const pt::ptree& node, std::size_t index,
                          std::vector<std::string>& warnings) {
    std::string id = object_id(node, "Building", index);

    const pt::ptree* height_el = find_child(node, "measuredHeight");
    if (!height_el) throw ValidationError("Building is missing measuredHeight", id);
    double height;
    try {
        height = std::stod(height_el->data());
    } catch (const std::exception&) {
        throw ValidationError("measuredHeight is not a number", id);
    }
    if (!(height > 0.0) || !std::isfinite(height)) {
        throw ValidationError("measuredHeight must be > 0", id);
    }

    const pt::ptree* footprint_el = find_child(node, "lod1Footprint");
    if (!footprint_el) throw ValidationError("Building is missing lod1Footprint", id);
    const pt::ptree* pos = find_descendant(*footprint_el, "posList");
    if (!pos) throw ValidationError("lod1Footprint has no posList", id);

    CgBuilding b{.id = id,
                 .footprint = ring_to_polygon(parse_pos_list(pos->data(), id), id),
                 .measured_height = height};

    for (const auto& [key, child] : node) {
        std::string name = local_name(key);
        if (name == "<xmlattr>" || name == "measuredHeight" || name == "lod1Footprint") continue;
        if (name == "boundedBy") {
            std::vector<const pt::ptree*> roofs;
            for (const auto& [bkey, bchild] : child) {
                if (local_name(bkey) == "RoofSurface") roofs.push_back(&bchild);
            }
            for (const pt::ptree* roof : roofs) {
                std::vector<const pt::ptree*> lists;
                find_descendants(*roof, "posList", lists);
                for (const pt::ptree* lp : lists) {
                    try {
                        b.roof_surfaces.push_back(
                            geom::Polygon3D::from_ring(parse_pos_list(lp->data(), id)));
                    } catch (const GeometryError& e) {
                        throw ValidationError(std::string("bad roof surface: ") + e.what(), id);
                    }
                }
            }
        } else if (name == "wallMaterial") {
            b.wall_material = child.data();
        } else if (name == "wallColor") {
            std::istringstream in(child.data());
            int r, g, bl;
            if (!(in >> r >> g >> bl) || r < 0 || r > 255 || g < 0 || g > 255 || bl < 0 ||
                bl > 255) {
                throw ValidationError("wallColor must be three integers in 0..255", id);
            }
            b.wall_color = {{r, g, bl}};
        } else {
            warnings.push_back("skipped unknown element '" + key + "' in Building " + id);
        }
    }
    return b;
}

CgStreet parse_road(const pt::ptree& node, std::size_t index,
                    std::vector<std::string>& warnings) {
    std::string id = object_id(node, "Road", index);
    CgStreet s;
    s.id = id;

    const pt::ptree* surface_el = nullptr;
    const pt::ptree* centerline_el = nullptr;
    std::optional<double> width;
    for (const auto& [key, child] : node) {
        std::string name = local_name(key);
        if (name == "<xmlattr>") continue;
        if (name == "lod1Surface") {
            surface_el = &child;
        } else if (name == "centerLine") {
            centerline_el = &child;
        } else if (name == "nominalWidth") {
            try {
                width = std::stod(child.data());
            } catch (const std::exception&) {
                throw ValidationError("nominalWidth is not a number", id);
            }
        } else if (name == "name") {
            s.name = child.data();
        } else {
            warnings.push_back("skipped unknown element '" + key + "' in Road " + id);
        }
    }

    if (surface_el) {
        const pt::ptree* pos = find_descendant(*surface_el, "posList");
        if (!pos) throw ValidationError("lod1Surface has no posList", id);
        s.geometry = StreetSurface{ring_to_polygon(parse_pos_list(pos->data(), id), id)};
    } else if (centerline_el) {
        const pt::ptree* pos = find_descendant(*centerline_el, "posList");
        const std::string& text = pos ? pos->data() : centerline_el->data();
        auto pts = drop_z(parse_pos_list(text, id));
        if (pts.size() < 2) throw ValidationError("centerLine needs at least 2 points", id);
        if (!width) throw ValidationError("centerLine form requires nominalWidth", id);
        if (!(*width > 0.0) || !std::isfinite(*width)) {
            throw ValidationError("nominalWidth must be > 0", id);
        }
        s.geometry = StreetCenterline{std::move(pts), *width};
    } else {
        throw ValidationError("Road has neither lod1Surface nor centerLine", id);
    }
    return s;
}

}  // namespace

ParsedCity parse_citygml(std::istream& document, const std::string& source_name) {
    pt::ptree tree;
    try {
        pt::read_xml(document, tree, pt::xml_parser::no_comments);
    } catch (const pt::xml_parser_error& e) {
        throw ParseError(std::string("malformed XML: ") + e.message(),
                         static_cast<long>(e.line()));
    }

    const pt::ptree* city = find_child(tree, "CityModel");
    if (!city) throw ValidationError("document has no CityModel root element");

    ParsedCity out;
    out.model.source_name = source_name;
    std::size_t index = 0;
    for (const auto& [key, member] : *city) {
        std::string name = local_name(key);
        if (name == "<xmlattr>") continue;
        if (name != "cityObjectMember") {
            out.warnings.push_back("skipped unknown element '" + key + "' in CityModel");
            continue;
        }
        ++index;
        for (const auto& [okey, object] : member) {
            std::string oname = local_name(okey);
            if (oname == "<xmlattr>") continue;
            if (oname == "Building") {
                out.model.buildings.push_back(parse_building(object, index, out.warnings));
            } else if (oname == "Road") {
                out.model.streets.push_back(parse_road(object, index, out.warnings));
            } else {
                out.warnings.push_back("skipped unknown city object '" + okey + "'");
            }
        }
    }
    return out;
}

}  // namespace aircanyon
