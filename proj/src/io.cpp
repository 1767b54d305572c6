#include "fiberkit/io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

namespace fiberkit {

using nlohmann::json;

namespace {

json quat_array(const std::vector<UnitQuaterniond>& qs) {
  json arr = json::array();
  for (const auto& q : qs) arr.push_back({q.w(), q.x(), q.y(), q.z()});
  return arr;
}

std::vector<UnitQuaterniond> quats_from(const json& arr) {
  std::vector<UnitQuaterniond> out;
  out.reserve(arr.size());
  for (const auto& s : arr) {
    if (!s.is_array() || s.size() != 4) throw std::invalid_argument("sample must be [w, x, y, z]");
    out.emplace_back(s[0].get<double>(), s[1].get<double>(), s[2].get<double>(), s[3].get<double>());
  }
  return out;
}

void check_count(const json& j) {
  const int n = j.at("n").get<int>();
  if (static_cast<int>(j.at("samples").size()) != n + 1)
    throw std::invalid_argument("expected n + 1 samples");
}

}  // namespace

json to_json(const LoopSO3d& loop) {
  return {{"n", loop.resolution()}, {"samples", quat_array(loop.samples())}};
}

LoopSO3d loop_from_json(const json& j) {
  check_count(j);
  return LoopSO3d::from_samples(quats_from(j.at("samples")));
}

json to_json(const RigidDiffeod& f) {
  return {{"alpha", {{"offset", f.alpha().offset()}, {"orientation", to_int(f.alpha().orientation())}}},
          {"parity", to_int(f.parity())},
          {"n", f.resolution()},
          {"samples", quat_array(f.path().samples())}};
}

RigidDiffeod rigid_diffeo_from_json(const json& j) {
  check_count(j);
  const auto& a = j.at("alpha");
  CircleMapd alpha(a.at("offset").get<double>(), sign_from_int(a.at("orientation").get<int>()));
  const Sign parity = sign_from_int(j.at("parity").get<int>());
  std::vector<OrthogonalMap3d> betas;
  for (const auto& q : quats_from(j.at("samples"))) betas.emplace_back(Rotationd(q), parity);
  return RigidDiffeod::from_samples(alpha, std::span<const OrthogonalMap3d>(betas));
}

ComponentClass component_from_string(const std::string& s) {
  if (s == "Trivial" || s == "T") return ComponentClass::kTrivial;
  if (s == "Nontrivial" || s == "N") return ComponentClass::kNontrivial;
  throw std::invalid_argument("unknown component: " + s);
}

json to_json(const GeneratorFamily& family) {
  json members = json::array();
  for (const auto& m : family.members) {
    const auto& p = m.grid_point;
    members.push_back({{"grid_point", {p[0], p[1], p[2]}},
                       {"loop", to_json(m.fibering.loop())},
                       {"component", std::string(to_string(m.component))}});
  }
  return {{"grid", {{"lat", family.grid.lat()}, {"lon", family.grid.lon()}}},
          {"component", std::string(to_string(family.target))},
          {"members", std::move(members)}};
}

GeneratorFamily family_from_json(const json& j) {
  SphereGrid grid(j.at("grid").at("lat").get<int>(), j.at("grid").at("lon").get<int>());
  GeneratorFamily family{grid, {}, component_from_string(j.at("component").get<std::string>())};
  const auto& members = j.at("members");
  if (members.size() != grid.size()) throw std::invalid_argument("member count does not match the grid");
  for (std::size_t i = 0; i < members.size(); ++i) {
    const auto& m = members[i];
    const auto& gp = m.at("grid_point");
    S2Pointd p = S2Pointd::normalized(Vec3<double>(gp[0].get<double>(), gp[1].get<double>(), gp[2].get<double>()));
    if ((p.vec() - grid.points()[i].vec()).norm() > 1e-9)
      throw std::invalid_argument("member " + std::to_string(i) + " is not at its grid point");
    family.members.push_back(
        {p, phi(loop_from_json(m.at("loop"))), component_from_string(m.at("component").get<std::string>())});
  }
  verify_family_classes(family);
  return family;
}

json to_json(const SphereToCircleMap& f) {
  return {{"rows", f.grid().rows()}, {"cols", f.grid().cols()}, {"values", f.values()}};
}

SphereToCircleMap circle_map_from_json(const json& j) {
  return SphereToCircleMap(CellGrid(j.at("rows").get<int>(), j.at("cols").get<int>()),
                           j.at("values").get<std::vector<double>>());
}

ExportScene build_scene(const Fiberingd& fibering, const std::vector<S2Pointd>& ys, int m) {
  ExportScene scene;
  scene.curves.reserve(ys.size());
  for (std::size_t k = 0; k < ys.size(); ++k) {
    const auto curve = sample_fiber(fibering, ys[k], m);
    Polyline line{"fiber_" + std::to_string(k), ys[k], {}};
    line.vertices.reserve(m);
    for (int i = 0; i < m; ++i) {
      const auto& s = curve.samples[i];
      line.vertices.push_back((1.0 + s.t) * s.y.vec());
    }
    scene.curves.push_back(std::move(line));
  }
  return scene;
}

namespace {
std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10f", v == 0.0 ? 0.0 : v);
  return buf;
}
}  // namespace

void write_obj(const ExportScene& scene, std::ostream& out) {
  out << "# fiberkit fiber export: (t, y) -> (1 + t) y\n";
  std::size_t next = 1;
  for (const auto& c : scene.curves) {
    out << "o " << c.label << "\n";
    for (const auto& v : c.vertices) out << "v " << fmt(v.x()) << ' ' << fmt(v.y()) << ' ' << fmt(v.z()) << "\n";
    out << "l";
    for (std::size_t i = 0; i < c.vertices.size(); ++i) out << ' ' << next + i;
    out << "\n";
    next += c.vertices.size();
  }
}

void write_scene_json(const ExportScene& scene, std::ostream& out) {
  json curves = json::array();
  for (const auto& c : scene.curves) {
    json pts = json::array();
    for (const auto& v : c.vertices) pts.push_back({v.x(), v.y(), v.z()});
    curves.push_back({{"label", c.label}, {"y", {c.y[0], c.y[1], c.y[2]}}, {"points", std::move(pts)}});
  }
  out << json{{"curves", std::move(curves)}}.dump(1) << "\n";
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return json::parse(in);
}

void write_json_file(const json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(1) << "\n";
}

}  // namespace fiberkit
