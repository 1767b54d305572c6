#include "fiberkit/families.hpp"

#include <charconv>
#include <cmath>
#include <numbers>

namespace fiberkit {

SphereGrid::SphereGrid(int lat, int lon) : lat_(lat), lon_(lon) {
  if (lat < 2 || lon < 3) throw std::invalid_argument("sphere grid needs lat >= 2 and lon >= 3");
  const double pi = std::numbers::pi;
  points_.push_back(S2Pointd::north());
  for (int i = 1; i < lat; ++i) {
    const double theta = pi * i / lat;
    for (int j = 0; j < lon; ++j) {
      const double phi = 2.0 * pi * j / lon;
      points_.push_back(S2Pointd::normalized(
          Vec3<double>(std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta))));
    }
  }
  points_.push_back(S2Pointd::south());

  const int south = static_cast<int>(points_.size()) - 1;
  auto ring = [&](int i, int j) { return 1 + (i - 1) * lon + ((j % lon) + lon) % lon; };
  for (int j = 0; j < lon; ++j) edges_.emplace_back(0, ring(1, j));
  for (int i = 1; i < lat; ++i) {
    for (int j = 0; j < lon; ++j) {
      edges_.emplace_back(ring(i, j), ring(i, j + 1));
      if (i + 1 < lat) edges_.emplace_back(ring(i, j), ring(i + 1, j));
    }
  }
  for (int j = 0; j < lon; ++j) edges_.emplace_back(ring(lat - 1, j), south);
}

SphereGrid SphereGrid::parse(std::string_view spec) {
  const auto x = spec.find_first_of("xX");
  if (x == std::string_view::npos) throw std::invalid_argument("grid spec must look like LAxLO");
  auto to_int = [](std::string_view s) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
      throw std::invalid_argument("bad integer in grid spec: " + std::string(s));
    return v;
  };
  return SphereGrid(to_int(spec.substr(0, x)), to_int(spec.substr(x + 1)));
}

double SphereGrid::max_edge_angle() const {
  double worst = 0.0;
  for (const auto& [a, b] : edges_) worst = std::max(worst, points_[a].angle_to(points_[b]));
  return worst;
}

namespace {

GeneratorFamily build_family(const SphereGrid& grid, ComponentClass target, int resolution,
                             bool concat_south) {
  GeneratorFamily family{grid, {}, target};
  family.members.reserve(grid.size());
  for (const auto& p : grid.points()) {
    LoopSO3d loop = gluck_loop(p, resolution);
    if (concat_south) loop = concatenate(loop, gluck_loop(S2Pointd::south(), resolution));
    family.members.push_back({p, phi(loop), classify(loop)});
  }
  verify_family_classes(family);
  return family;
}

}  // namespace

GeneratorFamily generator_family_N(const SphereGrid& grid, int resolution) {
  return build_family(grid, ComponentClass::kNontrivial, resolution, false);
}

GeneratorFamily generator_family_T(const SphereGrid& grid, int resolution) {
  return build_family(grid, ComponentClass::kTrivial, resolution, true);
}

void verify_family_classes(const GeneratorFamily& family) {
  for (std::size_t i = 0; i < family.members.size(); ++i) {
    const auto& m = family.members[i];
    const ComponentClass c = classify(m.fibering.loop());
    if (c != family.target || m.component != family.target) {
      const auto& p = m.grid_point;
      throw ClassificationError("family member " + std::to_string(i) + " at (" + std::to_string(p[0]) + ", " +
                                std::to_string(p[1]) + ", " + std::to_string(p[2]) + ") classifies as " +
                                std::string(to_string(c)) + ", expected " +
                                std::string(to_string(family.target)));
    }
  }
}

double max_adjacent_distance(const GeneratorFamily& family) {
  double worst = 0.0;
  for (const auto& [a, b] : family.grid.edges())
    worst = std::max(worst, sup_distance(family.members[a].fibering.loop(), family.members[b].fibering.loop()));
  return worst;
}

double continuity_bound(const SphereGrid& grid) { return 2.0 * grid.max_edge_angle() + kLoopTol; }

}  // namespace fiberkit
