#pragma once

// JSON mappings for events, states, ensembles and lattice specs.
//
//   event:     {"t":..., "x":..., "y":..., "z":...}          (missing keys = 0)
//   tachyon:   {"mu":..., "w":[...], "s":[...], "pseudo":bool, "infinite":bool}
//   massive:   {"m":..., "v":[...]}
//   ensemble:  {"source":event, "sink":event,
//               "paths":[{"segments":[{"start":event, "end":event, "E":..., "p":[...]}]}]}

#include "tachyon/amplitudes.hpp"
#include "tachyon/fourmomentum.hpp"
#include "tachyon/kinematics.hpp"

#include <json.hpp>

#include <variant>

namespace tachyon {

using json = nlohmann::json;

json to_json(const Vec3& v);
Vec3 vec3_from_json(const json& j);

json to_json(const SpacetimeEvent& e);
SpacetimeEvent event_from_json(const json& j);

json to_json(const SuperluminalCoords& s);

json to_json(const TachyonState& s);
TachyonState tachyon_from_json(const json& j);

json to_json(const MassiveState& s);
MassiveState massive_from_json(const json& j);

/// Dispatches on the presence of "mu" (tachyon) or "m" (massive).
std::variant<MassiveState, TachyonState> state_from_json(const json& j);

json to_json(const EnergyMomentum& em);
json to_json(const CovariantFourVector& A);

json to_json(const Path& p);
Path path_from_json(const json& j);

json to_json(const PathEnsemble& e);
PathEnsemble ensemble_from_json(const json& j);

} // namespace tachyon
