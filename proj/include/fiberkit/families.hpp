#pragma once

// Gluck generator families over a latitude-longitude sampling of S^2:
//   N family: p -> Phi(G_p)          (nontrivial component)
//   T family: p -> Phi(G_p * G_s)    (trivial component)

#include "fiberkit/fibering.hpp"
#include "fiberkit/james.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fiberkit {

/// Latitude-longitude points on S^2 with explicit adjacency. Index 0 is the
/// north pole, then rings of `lon` points at colatitudes i*pi/lat for
/// i = 1..lat-1, then the south pole: (lat - 1) * lon + 2 points.
class SphereGrid {
 public:
  SphereGrid(int lat, int lon);

  /// Parses "LAxLO", e.g. "32x64".
  static SphereGrid parse(std::string_view spec);

  int lat() const { return lat_; }
  int lon() const { return lon_; }
  const std::vector<S2Pointd>& points() const { return points_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  std::size_t size() const { return points_.size(); }

  /// Largest great-circle angle between adjacent points.
  double max_edge_angle() const;

 private:
  int lat_;
  int lon_;
  std::vector<S2Pointd> points_;
  std::vector<std::pair<int, int>> edges_;
};

struct FamilyMember {
  S2Pointd grid_point;
  Fiberingd fibering;
  ComponentClass component;
};

struct GeneratorFamily {
  SphereGrid grid;
  std::vector<FamilyMember> members;
  ComponentClass target;
};

/// Phi(G_p) for every grid point. Throws ClassificationError if any member
/// does not classify as Nontrivial.
GeneratorFamily generator_family_N(const SphereGrid& grid, int resolution = kDefaultResolution);

/// Phi(G_p * G_s) for every grid point. Throws ClassificationError if any
/// member does not classify as Trivial.
GeneratorFamily generator_family_T(const SphereGrid& grid, int resolution = kDefaultResolution);

/// Re-classifies every member; throws ClassificationError on the first mismatch.
void verify_family_classes(const GeneratorFamily& family);

/// Max sup_distance between loops of adjacent members.
double max_adjacent_distance(const GeneratorFamily& family);

/// Allowed adjacent-member distance for a grid: rotations by the same angle
/// about axes p and q are at most 2 * angle(p, q) apart.
double continuity_bound(const SphereGrid& grid);

}  // namespace fiberkit
