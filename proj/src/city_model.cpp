#include "aircanyon/city_model.hpp"

#include <cmath>
#include <unordered_set>

namespace aircanyon {

std::vector<ValidationFinding> validate_model(const CityModel& model) {
    std::vector<ValidationFinding> findings;
    std::unordered_set<std::string> seen;

    auto check_id = [&](const std::string& id, const char* kind) {
        if (!seen.insert(id).second) {
            findings.push_back({id, std::string("duplicate ") + kind + " id"});
        }
    };
    auto finite2 = [](const std::vector<geom::Point2>& pts) {
        for (const auto& p : pts) {
            if (!std::isfinite(p.x) || !std::isfinite(p.y)) return false;
        }
        return true;
    };

    for (const auto& b : model.buildings) {
        check_id(b.id, "building");
        if (!(b.measured_height > 0.0) || !std::isfinite(b.measured_height)) {
            findings.push_back({b.id, "measured_height must be > 0"});
        }
        if (!finite2(b.footprint.ring())) {
            findings.push_back({b.id, "footprint has non-finite coordinates"});
        }
        if (!b.footprint.is_simple()) {
            findings.push_back({b.id, "footprint ring is self-intersecting"});
        }
    }

    for (const auto& s : model.streets) {
        check_id(s.id, "street");
        if (s.is_surface()) {
            if (!finite2(s.surface().boundary.ring())) {
                findings.push_back({s.id, "boundary has non-finite coordinates"});
            }
            if (!s.surface().boundary.is_simple()) {
                findings.push_back({s.id, "boundary ring is self-intersecting"});
            }
        } else {
            const auto& cl = s.centerline();
            if (cl.polyline.size() < 2) {
                findings.push_back({s.id, "centerline needs at least 2 points"});
            }
            if (!finite2(cl.polyline)) {
                findings.push_back({s.id, "centerline has non-finite coordinates"});
            }
            if (!(cl.width > 0.0) || !std::isfinite(cl.width)) {
                findings.push_back({s.id, "nominal width must be > 0"});
            }
        }
    }
    return findings;
}

}  // namespace aircanyon
