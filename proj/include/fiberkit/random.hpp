#pragma once

// Seeded generators for randomized property checks.

#include "fiberkit/fibering.hpp"

#include <cstdint>
#include <random>

namespace fiberkit {

class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo = 0.0, double hi = 1.0);
  int uniform_int(int lo, int hi);
  Sign sign();

  S2Pointd s2_point();
  UnitQuaterniond unit_quaternion();
  Rotationd rotation();
  OrthogonalMap3d orthogonal_map();
  CircleMapd circle_map();

  /// Smooth based loop: a rotation by 2 pi k t about a random axis (k in
  /// {0, 1, 2}) times a band-limited wiggle t -> exp(v(t)) with v(0) = v(1) = 0.
  /// Its class is Nontrivial iff k is odd.
  LoopSO3d smooth_loop(int resolution = kDefaultResolution);
  /// Same with k fixed.
  LoopSO3d smooth_loop_with_turns(int turns, int resolution = kDefaultResolution);
  /// Smooth loop whose sup distance from the constant loop exceeds min_sup.
  LoopSO3d nonconstant_loop(double min_sup, int resolution = kDefaultResolution);

  RigidTripled rigid_triple(int resolution = kDefaultResolution);
  RigidDiffeod rigid_diffeo(int resolution = kDefaultResolution);
  Fiberingd fibering(int resolution = kDefaultResolution);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace fiberkit
