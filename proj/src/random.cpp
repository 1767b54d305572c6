#include "fiberkit/random.hpp"

#include <cmath>
#include <numbers>

namespace fiberkit {

double RandomSource::uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }

int RandomSource::uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

Sign RandomSource::sign() { return uniform_int(0, 1) == 0 ? Sign::kPlus : Sign::kMinus; }

S2Pointd RandomSource::s2_point() {
  std::normal_distribution<double> n;
  Vec3<double> v;
  do {
    v = Vec3<double>(n(engine_), n(engine_), n(engine_));
  } while (v.norm() < 1e-6);
  return S2Pointd::normalized(v);
}

UnitQuaterniond RandomSource::unit_quaternion() {
  std::normal_distribution<double> n;
  Eigen::Quaterniond q;
  do {
    q = Eigen::Quaterniond(n(engine_), n(engine_), n(engine_), n(engine_));
  } while (q.norm() < 1e-6);
  return UnitQuaterniond::normalized(q);
}

Rotationd RandomSource::rotation() { return Rotationd(unit_quaternion()); }

OrthogonalMap3d RandomSource::orthogonal_map() { return OrthogonalMap3d(rotation(), sign()); }

CircleMapd RandomSource::circle_map() { return CircleMapd(uniform(), sign()); }

LoopSO3d RandomSource::smooth_loop_with_turns(int turns, int resolution) {
  const double two_pi = 2.0 * std::numbers::pi;
  const S2Pointd axis = s2_point();
  const Rotationd frame = rotation();
  // Wiggle amplitude shrinks with the number of base turns so the total
  // rotation stays near 4 pi.
  const double amp = turns >= 2 ? 0.15 : 0.5;
  Vec3<double> a1, b1, a2, b2;
  for (auto* v : {&a1, &b1, &a2, &b2})
    *v = Vec3<double>(uniform(-amp, amp), uniform(-amp, amp), uniform(-amp, amp));

  std::vector<UnitQuaterniond> samples;
  samples.reserve(resolution + 1);
  for (int i = 0; i <= resolution; ++i) {
    const double t = double(i) / resolution;
    const auto base = axis_angle_lift(axis, turns * t);
    const Vec3<double> v = a1 * std::sin(two_pi * t) + b1 * (1.0 - std::cos(two_pi * t)) +
                           a2 * std::sin(2.0 * two_pi * t) + b2 * (1.0 - std::cos(2.0 * two_pi * t));
    const double angle = v.norm();
    UnitQuaterniond wiggle;
    if (angle > 0.0) {
      const Vec3<double> s = std::sin(angle / 2.0) * v / angle;
      wiggle = UnitQuaterniond::normalized(std::cos(angle / 2.0), s.x(), s.y(), s.z());
    }
    const auto& f = frame.quaternion();
    samples.push_back(f * base * wiggle * f.conjugate());
  }
  samples.front() = UnitQuaterniond::identity();
  return LoopSO3d::from_samples(std::move(samples));
}

LoopSO3d RandomSource::smooth_loop(int resolution) { return smooth_loop_with_turns(uniform_int(0, 2), resolution); }

LoopSO3d RandomSource::nonconstant_loop(double min_sup, int resolution) {
  const LoopSO3d id = LoopSO3d::constant_identity(resolution);
  for (;;) {
    LoopSO3d l = smooth_loop(resolution);
    if (sup_distance(l, id) > min_sup) return l;
  }
}

RigidTripled RandomSource::rigid_triple(int resolution) {
  CircleMapd alpha = circle_map();
  OrthogonalMap3d beta = orthogonal_map();
  return {alpha, beta, smooth_loop(resolution)};
}

RigidDiffeod RandomSource::rigid_diffeo(int resolution) { return unfactorize(rigid_triple(resolution)); }

Fiberingd RandomSource::fibering(int resolution) { return phi(smooth_loop(resolution)); }

}  // namespace fiberkit
