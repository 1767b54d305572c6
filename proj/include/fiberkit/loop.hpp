#pragma once

// Identity-based loops in SO(3) and their component class in
// pi_1(SO(3)) = Z/2, read off as the endpoint of the lift through S^3.

#include "fiberkit/path.hpp"

#include <span>
#include <string_view>

namespace fiberkit {

/// Which component of the based loop space a loop lies in.
enum class ComponentClass { kTrivial, kNontrivial };

inline std::string_view to_string(ComponentClass c) {
  return c == ComponentClass::kTrivial ? "Trivial" : "Nontrivial";
}
inline ComponentClass component_from_sign(Sign s) {
  return s == Sign::kPlus ? ComponentClass::kTrivial : ComponentClass::kNontrivial;
}
inline Sign endpoint_sign(ComponentClass c) {
  return c == ComponentClass::kTrivial ? Sign::kPlus : Sign::kMinus;
}
/// Group law of Z/2.
inline ComponentClass operator*(ComponentClass a, ComponentClass b) {
  return component_from_sign(endpoint_sign(a) * endpoint_sign(b));
}

/// Minimum |<q_i, q_{i+1}>| accepted when lifting sampled rotations.
inline constexpr double kLiftDotFloor = 1e-6;

/// Based loop t -> gamma_t in SO(3), gamma_0 = id, with its canonical lift.
template <typename S>
class LoopSO3 {
 public:
  using Scalar = S;

  /// Constant loop at the identity.
  LoopSO3() : LoopSO3(LiftedPath<S>::constant(UnitQuaternion<S>::identity(), kDefaultResolution), true) {}

  static LoopSO3 constant_identity(int resolution = kDefaultResolution) {
    return LoopSO3(LiftedPath<S>::constant(UnitQuaternion<S>::identity(), resolution), true);
  }

  /// Lift samples q_0..q_N at t_i = i/N. q_0 must be +1 and q_N must be +-1
  /// within kLoopTol; consecutive samples must have positive inner product.
  static LoopSO3 from_samples(std::vector<UnitQuaternion<S>> samples) {
    if (samples.size() < 2) throw std::invalid_argument("a loop needs at least two samples");
    if (samples.front().chord(UnitQuaternion<S>::identity()) > S(kAlgebraTol))
      throw std::invalid_argument("loop is not based at the identity");
    samples.front() = UnitQuaternion<S>::identity();
    const auto& last = samples.back();
    if (std::min(last.chord(UnitQuaternion<S>::identity()),
                 last.chord(-UnitQuaternion<S>::identity())) > S(kLoopTol))
      throw std::invalid_argument("loop lift does not end at +-1");
    return LoopSO3(LiftedPath<S>::sampled(std::move(samples)));
  }

  /// Canonical lift of sampled rotations (each given by either representative).
  static LoopSO3 from_rotations(std::span<const Rotation<S>> rotations);

  /// Wraps a lifted path; checks basedness and sign consistency at the
  /// nominal resolution.
  static LoopSO3 from_path(LiftedPath<S> path) { return LoopSO3(std::move(path)); }

  int resolution() const { return path_.resolution(); }
  const LiftedPath<S>& path() const { return path_; }

  UnitQuaternion<S> lift(S t) const { return path_.at(t); }
  Rotation<S> operator()(S t) const { return path_.rotation_at(t); }
  Sign endpoint() const { return path_.closure(); }

  std::vector<UnitQuaternion<S>> samples() const { return path_.samples(); }
  std::vector<UnitQuaternion<S>> samples(int n) const { return path_.samples(n); }

 private:
  explicit LoopSO3(LiftedPath<S> path, bool trusted = false) : path_(std::move(path)) {
    if (trusted) return;
    const int n = path_.resolution();
    UnitQuaternion<S> prev = path_.at(S(0));
    if (prev.chord(UnitQuaternion<S>::identity()) > S(kAlgebraTol))
      throw std::invalid_argument("loop is not based at the identity");
    for (int i = 1; i <= n; ++i) {
      UnitQuaternion<S> q = path_.at(S(i) / S(n));
      if (!(prev.dot(q) > S(0)))
        throw InsufficientResolution("loop lift is not sign-consistent at resolution " +
                                     std::to_string(n));
      prev = q;
    }
  }

  LiftedPath<S> path_;
};

/// Canonical lift of a sequence of rotations starting from +1: each
/// representative is chosen to have positive inner product with the previous
/// lifted sample. Throws InsufficientResolution when two consecutive
/// rotations are too far apart to decide.
template <typename S>
std::vector<UnitQuaternion<S>> canonical_lift(std::span<const Rotation<S>> rotations) {
  std::vector<UnitQuaternion<S>> lift;
  lift.reserve(rotations.size());
  for (std::size_t i = 0; i < rotations.size(); ++i) {
    UnitQuaternion<S> q = rotations[i].quaternion();
    if (i == 0) {
      if (q.w() < S(0)) q = -q;
    } else {
      S d = lift.back().dot(q);
      if (std::abs(d) <= S(kLiftDotFloor))
        throw InsufficientResolution("consecutive rotations " + std::to_string(i - 1) + " and " +
                                     std::to_string(i) + " cannot be lifted unambiguously");
      if (d < S(0)) q = -q;
    }
    lift.push_back(q);
  }
  return lift;
}

template <typename S>
LoopSO3<S> LoopSO3<S>::from_rotations(std::span<const Rotation<S>> rotations) {
  return from_samples(canonical_lift(rotations));
}

template <typename S>
Rotation<S> evaluate(const LoopSO3<S>& loop, S t) {
  return loop(t);
}

/// One full turn about the oriented axis p: lift samples (cos pi t, sin pi t p).
template <typename S>
LoopSO3<S> gluck_loop(const S2Point<S>& p, int resolution = kDefaultResolution) {
  if (resolution < 8) throw std::invalid_argument("gluck_loop needs resolution >= 8");
  std::vector<UnitQuaternion<S>> samples;
  samples.reserve(resolution + 1);
  for (int i = 0; i <= resolution; ++i) samples.push_back(axis_angle_lift(p, S(i) / S(resolution)));
  return LoopSO3<S>::from_samples(std::move(samples));
}

/// Equal-share concatenation: loops[i] is traversed on [i/k, (i+1)/k].
template <typename S>
LoopSO3<S> concatenate(std::span<const LoopSO3<S>> loops) {
  if (loops.empty()) return LoopSO3<S>::constant_identity();
  std::vector<LiftedPath<S>> parts;
  parts.reserve(loops.size());
  for (const auto& l : loops) parts.push_back(l.path());
  return LoopSO3<S>::from_path(LiftedPath<S>::concatenate(parts));
}

template <typename S>
LoopSO3<S> concatenate(const LoopSO3<S>& a, const LoopSO3<S>& b) {
  const LoopSO3<S> both[] = {a, b};
  return concatenate(std::span<const LoopSO3<S>>(both));
}

/// t -> a(1 - t), rebased to start at +1. The lift is closure * a(1 - t),
/// which the periodic extension produces directly.
template <typename S>
LoopSO3<S> invert_loop(const LoopSO3<S>& a) {
  using F = typename LiftedPath<S>::Factor;
  return LoopSO3<S>::from_path(LiftedPath<S>::product({F{a.path(), CircleMap<S>::reflection(S(0))}}));
}

/// Right translation t -> gamma_t * r (not based unless r = id).
template <typename S>
LiftedPath<S> right_translate(const LiftedPath<S>& gamma, const Rotation<S>& r) {
  using F = typename LiftedPath<S>::Factor;
  return LiftedPath<S>::product({F{gamma}, F{LiftedPath<S>::constant(r.quaternion(), gamma.resolution())}});
}

/// t -> P_t P_0^{-1}.
template <typename S>
LoopSO3<S> rebase(const LiftedPath<S>& path) {
  return LoopSO3<S>::from_path(path.rebased());
}

/// The map c_{alpha, beta}: gamma_t -> beta^{-1} gamma_{alpha(t)} beta zeta^{-1}
/// with zeta = beta^{-1} gamma_{alpha(0)} beta. The parity of beta cancels.
template <typename S>
LoopSO3<S> transport(const CircleMap<S>& alpha, const OrthogonalMap3<S>& beta, const LoopSO3<S>& gamma) {
  using F = typename LiftedPath<S>::Factor;
  const int n = gamma.resolution();
  const auto qb = beta.rotation().quaternion();
  auto conj = LiftedPath<S>::product({F{LiftedPath<S>::constant(qb.conjugate(), n)},
                                       F{gamma.path(), alpha},
                                       F{LiftedPath<S>::constant(qb, n)}});
  return LoopSO3<S>::from_path(conj.rebased());
}

/// The stated inverse of c_{alpha, beta}: gamma_t -> beta gamma_{alpha^{-1}(t)} beta^{-1}.
/// Applied after transport it returns t -> gamma_t gamma_{alpha(0)}^{-1}, a
/// right translate of gamma, so the result is an unbased path in general.
template <typename S>
LiftedPath<S> transport_inverse(const CircleMap<S>& alpha, const OrthogonalMap3<S>& beta,
                                const LoopSO3<S>& gamma) {
  using F = typename LiftedPath<S>::Factor;
  const int n = gamma.resolution();
  const auto qb = beta.rotation().quaternion();
  return LiftedPath<S>::product({F{LiftedPath<S>::constant(qb, n)},
                                  F{gamma.path(), alpha.inverse()},
                                  F{LiftedPath<S>::constant(qb.conjugate(), n)}});
}

/// Lifts the loop's rotations at its nominal resolution from scratch (only the
/// projections to SO(3) are used) and reads off the endpoint.
template <typename S>
ComponentClass classify(const LoopSO3<S>& loop, int resolution = 0) {
  const int n = resolution > 0 ? resolution : loop.resolution();
  std::vector<Rotation<S>> rots;
  rots.reserve(n + 1);
  for (int i = 0; i <= n; ++i) rots.push_back(loop(S(i) / S(n)));
  auto lifted = canonical_lift(std::span<const Rotation<S>>(rots));
  const auto& end = lifted.back();
  if (std::min(end.chord(UnitQuaternion<S>::identity()), end.chord(-UnitQuaternion<S>::identity())) >
      S(kLoopTol))
    throw std::invalid_argument("sampled loop does not close up at the identity");
  return end.w() > S(0) ? ComponentClass::kTrivial : ComponentClass::kNontrivial;
}

template <typename S>
S sup_distance(const LoopSO3<S>& a, const LoopSO3<S>& b) {
  return sup_distance(a.path(), b.path());
}

/// Re-samples the loop at resolution n as a plain sampled loop.
template <typename S>
LoopSO3<S> resample(const LoopSO3<S>& loop, int n) {
  return LoopSO3<S>::from_samples(loop.samples(n));
}

using LoopSO3d = LoopSO3<double>;

}  // namespace fiberkit
