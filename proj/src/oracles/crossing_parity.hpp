#pragma once

// Component class of a sampled loop of rotation matrices, computed without
// quaternions: each rotation is placed in the axis-angle ball model of RP^3
// (radius pi, antipodal boundary points identified) and the loop's passages
// through the boundary sphere are counted. Odd count <=> Nontrivial.

#include "fiberkit/loop.hpp"

#include <Eigen/Core>

#include <span>
#include <vector>

namespace fiberkit::oracles {

/// Rotation vector (angle * axis, angle in [0, pi]) from a rotation matrix.
Eigen::Vector3d ball_point(const Eigen::Matrix3d& r);

/// Number of consecutive sample pairs whose ball points are more than pi
/// apart, i.e. the path jumped to the antipodal side of the boundary.
int boundary_crossings(std::span<const Eigen::Matrix3d> rotations);

ComponentClass crossing_parity(std::span<const Eigen::Matrix3d> rotations);

/// Samples loop(t).matrix() at `samples` + 1 points and applies crossing_parity.
ComponentClass crossing_parity(const LoopSO3d& loop, int samples);

}  // namespace fiberkit::oracles
