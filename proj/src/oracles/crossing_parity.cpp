#include "oracles/crossing_parity.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace fiberkit::oracles {

Eigen::Vector3d ball_point(const Eigen::Matrix3d& r) {
  const double c = std::clamp((r.trace() - 1.0) / 2.0, -1.0, 1.0);
  const double angle = std::acos(c);
  if (angle < 1e-12) return Eigen::Vector3d::Zero();
  const Eigen::Vector3d skew(r(2, 1) - r(1, 2), r(0, 2) - r(2, 0), r(1, 0) - r(0, 1));
  const double s = std::sin(angle);
  if (s > 1e-6) return angle * skew / (2.0 * s);

  // Near a half turn: R + I ~ 2 a a^T. Take the largest diagonal entry for
  // the pivot, then orient by the (tiny) skew part when it is informative.
  int k = 0;
  r.diagonal().maxCoeff(&k);
  Eigen::Vector3d axis;
  axis[k] = std::sqrt(std::max(0.0, (r(k, k) + 1.0) / 2.0));
  for (int j = 0; j < 3; ++j)
    if (j != k) axis[j] = (r(k, j) + r(j, k)) / (4.0 * axis[k]);
  axis.normalize();
  if (skew.dot(axis) < 0.0) axis = -axis;
  return angle * axis;
}

int boundary_crossings(std::span<const Eigen::Matrix3d> rotations) {
  int count = 0;
  Eigen::Vector3d prev = ball_point(rotations.front());
  for (std::size_t i = 1; i < rotations.size(); ++i) {
    const Eigen::Vector3d cur = ball_point(rotations[i]);
    if ((cur - prev).norm() > std::numbers::pi) ++count;
    prev = cur;
  }
  return count;
}

ComponentClass crossing_parity(std::span<const Eigen::Matrix3d> rotations) {
  return boundary_crossings(rotations) % 2 == 0 ? ComponentClass::kTrivial : ComponentClass::kNontrivial;
}

ComponentClass crossing_parity(const LoopSO3d& loop, int samples) {
  std::vector<Eigen::Matrix3d> mats;
  mats.reserve(samples + 1);
  for (int i = 0; i <= samples; ++i) mats.push_back(loop(double(i) / samples).matrix());
  return crossing_parity(std::span<const Eigen::Matrix3d>(mats));
}

}  // namespace fiberkit::oracles
