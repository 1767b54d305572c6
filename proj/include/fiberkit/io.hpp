#pragma once

// JSON and OBJ serialization.
//
//   LoopSO3:          {"n": N, "samples": [[w,x,y,z], ...]}            (N + 1 lift samples)
//   RigidDiffeo:      {"alpha": {"offset": a, "orientation": +-1}, "parity": +-1,
//                      "n": N, "samples": [[w,x,y,z], ...]}           (rotation part of beta_t)
//   GeneratorFamily:  {"grid": {"lat": LA, "lon": LO}, "component": "Trivial"|"Nontrivial",
//                      "members": [{"grid_point": [x,y,z], "loop": <LoopSO3>,
//                                   "component": ...}, ...]}
//   SphereToCircleMap:{"rows": R, "cols": C, "values": [...]}          (row-major cells)
//   Fiber scene:      {"curves": [{"label": s, "y": [x,y,z], "points": [[x,y,z], ...]}]}
//
// Fiber scenes use the thickened-sphere picture of S^1 x S^2:
// (t, y) -> (1 + t) y for t in [0, 1).

#include "fiberkit/families.hpp"
#include "fiberkit/nullhomotopy.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace fiberkit {

nlohmann::json to_json(const LoopSO3d& loop);
LoopSO3d loop_from_json(const nlohmann::json& j);

nlohmann::json to_json(const RigidDiffeod& f);
RigidDiffeod rigid_diffeo_from_json(const nlohmann::json& j);

nlohmann::json to_json(const GeneratorFamily& family);
/// Rebuilds the family and re-checks every member's class.
GeneratorFamily family_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SphereToCircleMap& f);
SphereToCircleMap circle_map_from_json(const nlohmann::json& j);

ComponentClass component_from_string(const std::string& s);

struct Polyline {
  std::string label;
  S2Pointd y;
  std::vector<Vec3<double>> vertices;
};

/// Fibers polylines in R^3, one per starting point.
struct ExportScene {
  std::vector<Polyline> curves;
};

/// Samples the fiber through (0, y) for each y at fiber resolution m and maps
/// (t_i, p_i) -> (1 + t_i) p_i for i = 0..m-1 (t = 1 is identified with t = 0).
ExportScene build_scene(const Fiberingd& fibering, const std::vector<S2Pointd>& ys, int m);

/// `o` + `v` records per curve followed by one `l` record (1-based indices).
void write_obj(const ExportScene& scene, std::ostream& out);
void write_scene_json(const ExportScene& scene, std::ostream& out);

nlohmann::json read_json_file(const std::string& path);
void write_json_file(const nlohmann::json& j, const std::string& path);

}  // namespace fiberkit
