#include "tachyon/serialization.hpp"

#include <stdexcept>

namespace tachyon {

json to_json(const Vec3& v) { return json::array({v.x(), v.y(), v.z()}); }

Vec3 vec3_from_json(const json& j) {
    if (!j.is_array() || j.size() != 3)
        throw std::invalid_argument("expected a 3-element array");
    return {j.at(0).get<double>(), j.at(1).get<double>(), j.at(2).get<double>()};
}

json to_json(const SpacetimeEvent& e) { return {{"t", e.t}, {"x", e.x}, {"y", e.y}, {"z", e.z}}; }

SpacetimeEvent event_from_json(const json& j) {
    if (!j.is_object())
        throw std::invalid_argument("event: expected an object");
    SpacetimeEvent e{j.value("t", 0.0), j.value("x", 0.0), j.value("y", 0.0), j.value("z", 0.0)};
    if (!e.finite())
        throw std::invalid_argument("event: coordinates must be finite");
    return e;
}

json to_json(const SuperluminalCoords& s) { return {{"chi", s.chi}, {"tau", to_json(s.tau)}}; }

json to_json(const TachyonState& s) {
    json j{{"mu", s.mu}, {"w", to_json(s.w)}, {"s", to_json(s.s)}, {"pseudo", s.pseudo}};
    if (s.infinite_speed)
        j["infinite"] = true;
    return j;
}

TachyonState tachyon_from_json(const json& j) {
    TachyonState s;
    s.mu = j.at("mu").get<double>();
    s.w = vec3_from_json(j.at("w"));
    s.s = vec3_from_json(j.at("s"));
    s.pseudo = j.value("pseudo", false);
    s.infinite_speed = j.value("infinite", false);
    if (s.infinite_speed)
        s.w.normalize();
    return s;
}

json to_json(const MassiveState& s) { return {{"m", s.m}, {"v", to_json(s.v)}}; }

MassiveState massive_from_json(const json& j) {
    return {j.at("m").get<double>(), vec3_from_json(j.at("v"))};
}

std::variant<MassiveState, TachyonState> state_from_json(const json& j) {
    if (!j.is_object())
        throw std::invalid_argument("state: expected an object");
    if (j.contains("mu"))
        return tachyon_from_json(j);
    if (j.contains("m"))
        return massive_from_json(j);
    throw std::invalid_argument("state: needs \"mu\" (tachyon) or \"m\" (massive)");
}

json to_json(const EnergyMomentum& em) { return {{"E", em.E}, {"p", to_json(em.p)}}; }

json to_json(const CovariantFourVector& A) {
    return {{"family", to_string(A.family)}, {"a0", A.a0}, {"a", to_json(A.a)}};
}

json to_json(const Path& p) {
    json segs = json::array();
    for (const auto& s : p.segments())
        segs.push_back({{"start", to_json(s.start)},
                        {"end", to_json(s.end)},
                        {"E", s.energy},
                        {"p", to_json(s.momentum)}});
    return {{"segments", segs}};
}

Path path_from_json(const json& j) {
    std::vector<PathSegment> segs;
    for (const auto& s : j.at("segments")) {
        PathSegment seg;
        seg.start = event_from_json(s.at("start"));
        seg.end = event_from_json(s.at("end"));
        seg.energy = s.at("E").get<double>();
        seg.momentum = s.contains("p") ? vec3_from_json(s.at("p")) : Vec3::Zero();
        segs.push_back(seg);
    }
    return Path(std::move(segs));
}

json to_json(const PathEnsemble& e) {
    json paths = json::array();
    for (const auto& p : e.paths)
        paths.push_back(to_json(p));
    return {{"source", to_json(e.source)}, {"sink", to_json(e.sink)}, {"paths", paths}};
}

PathEnsemble ensemble_from_json(const json& j) {
    PathEnsemble e;
    e.source = event_from_json(j.at("source"));
    e.sink = event_from_json(j.at("sink"));
    for (const auto& p : j.at("paths"))
        e.paths.push_back(path_from_json(p));
    e.validate();
    return e;
}

} // namespace tachyon
