#pragma once

// Rigid Seifert fiberings of S^1 x S^2. A fibering is stored as its
// identity-based loop lambda: the fiber through (0, y) is t -> (t, lambda_t(y)).

#include "fiberkit/rigid.hpp"

#include <optional>

namespace fiberkit {

template <typename S>
class Fibering {
 public:
  using Scalar = S;

  /// The trivial fibering F_T: fibers S^1 x {y}.
  Fibering() = default;
  explicit Fibering(LoopSO3<S> loop) : loop_(std::move(loop)) {}

  static Fibering trivial(int resolution = kDefaultResolution) {
    return Fibering(LoopSO3<S>::constant_identity(resolution));
  }

  const LoopSO3<S>& loop() const { return loop_; }

  /// Point at parameter t on the fiber through (0, y).
  S2Point<S> fiber_point(S t, const S2Point<S>& y) const { return loop_(wrap01(t)).apply(y); }

 private:
  LoopSO3<S> loop_;
};

/// Phi: based loops -> rigid fiberings.
template <typename S>
Fibering<S> phi(const LoopSO3<S>& loop) {
  return Fibering<S>(loop);
}

template <typename S>
struct FiberSample {
  S t;
  S2Point<S> y;
};

/// One sampled fiber; consecutive points at most pi/4 apart on S^2.
template <typename S>
struct FiberCurve {
  std::vector<FiberSample<S>> samples;
};

/// Image of F under f = (alpha, beta, lambda):
///   gamma_t = beta lambda_{alpha^{-1}(t)} mu_{alpha^{-1}(t)} zeta^{-1},
///   zeta    = beta lambda_{alpha^{-1}(0)} mu_{alpha^{-1}(0)},
/// where mu is the loop of F (mu = id for F_T). The parity of beta cancels.
template <typename S>
Fibering<S> pushforward(const RigidTriple<S>& f, const Fibering<S>& fibering) {
  using F = typename LiftedPath<S>::Factor;
  const CircleMap<S> ainv = f.alpha.inverse();
  const int n = std::max(f.gamma.resolution(), fibering.loop().resolution());
  auto path = LiftedPath<S>::product({F{LiftedPath<S>::constant(f.beta.rotation().quaternion(), n)},
                                       F{f.gamma.path(), ainv},
                                       F{fibering.loop().path(), ainv}});
  return Fibering<S>(LoopSO3<S>::from_path(path.rebased()));
}

/// Same as above with f given as (alpha, beta_t).
template <typename S>
Fibering<S> pushforward(const RigidDiffeo<S>& f, const Fibering<S>& fibering) {
  using F = typename LiftedPath<S>::Factor;
  const CircleMap<S> ainv = f.alpha().inverse();
  auto path = LiftedPath<S>::product({F{f.path(), ainv}, F{fibering.loop().path(), ainv}});
  return Fibering<S>(LoopSO3<S>::from_path(path.rebased()));
}

template <typename S>
struct Trivialization {
  Fibering<S> fibering;
  CircleMap<S> alpha;
  OrthogonalMap3<S> beta;
};

/// phi(f) = (f(F_T), alpha, beta).
template <typename S>
Trivialization<S> trivialize(const RigidTriple<S>& f) {
  return {pushforward(f, Fibering<S>::trivial(f.gamma.resolution())), f.alpha, f.beta};
}

/// phi^{-1}(F, alpha, beta) = (alpha, beta, c_{alpha,beta}(gamma)) with gamma the loop of F.
template <typename S>
RigidTriple<S> untrivialize(const Fibering<S>& fibering, const CircleMap<S>& alpha,
                            const OrthogonalMap3<S>& beta) {
  return {alpha, beta, transport(alpha, beta, fibering.loop())};
}

/// Samples (t_i, lambda_{t_i}(y)) for t_i = i/M, i = 0..M.
template <typename S>
FiberCurve<S> sample_fiber(const Fibering<S>& fibering, const S2Point<S>& y, int m) {
  if (m < 1) throw std::invalid_argument("fiber resolution must be positive");
  FiberCurve<S> curve;
  curve.samples.reserve(m + 1);
  for (int i = 0; i <= m; ++i) {
    const S t = S(i) / S(m);
    curve.samples.push_back({t, fibering.loop()(t).apply(y)});
  }
  const S max_step = std::numbers::pi_v<S> / S(4);
  for (int i = 0; i < m; ++i) {
    if (curve.samples[i].y.angle_to(curve.samples[i + 1].y) > max_step + S(1e-12))
      throw InsufficientResolution("fiber step exceeds pi/4 at fiber resolution " + std::to_string(m));
  }
  if ((curve.samples.front().y.vec() - curve.samples.back().y.vec()).norm() > S(kLoopTol))
    throw std::invalid_argument("sampled fiber does not close up");
  return curve;
}

/// n roughly uniform points on S^2 (golden-angle spiral).
template <typename S>
std::vector<S2Point<S>> fibonacci_sphere(int n) {
  std::vector<S2Point<S>> pts;
  pts.reserve(n);
  const S golden = std::numbers::pi_v<S> * (S(3) - std::sqrt(S(5)));
  for (int i = 0; i < n; ++i) {
    S z = S(1) - S(2) * (S(i) + S(0.5)) / S(n);
    S r = std::sqrt(std::max(S(0), S(1) - z * z));
    S phi = golden * S(i);
    pts.push_back(S2Point<S>::normalized(Vec3<S>(r * std::cos(phi), r * std::sin(phi), z)));
  }
  return pts;
}

/// Largest displacement of an F_T fiber's image away from a single F_T fiber:
/// max over sampled s, y of |beta_s(y) - beta_0(y)|. The image of S^1 x {y}
/// is {(alpha(s), beta_s(y))}, which is one F_T fiber iff beta_s(y) is constant.
template <typename S>
S fiber_preservation_defect(const RigidDiffeo<S>& f) {
  std::vector<S2Point<S>> ys = fibonacci_sphere<S>(16);
  ys.emplace_back(S(1), S(0), S(0));
  ys.emplace_back(S(0), S(1), S(0));
  ys.emplace_back(S(0), S(0), S(1));
  const int n = 2 * f.resolution();
  S worst = S(0);
  for (const auto& y : ys) {
    const Vec3<S> base = f.beta(S(0)).apply(y.vec());
    for (int i = 1; i < n; ++i)
      worst = std::max(worst, (f.beta(S(i) / S(n)).apply(y.vec()) - base).norm());
  }
  return worst;
}

/// True iff f carries every sampled F_T fiber onto an F_T fiber within tol.
template <typename S>
bool is_fiber_preserving(const RigidDiffeo<S>& f, S tol = S(kLoopTol)) {
  return fiber_preservation_defect(f) <= tol;
}

template <typename S>
bool is_fiber_preserving(const RigidTriple<S>& f, S tol = S(kLoopTol)) {
  return is_fiber_preserving(unfactorize(f), tol);
}

/// Recovers the loop of a fibering from its fibers through (0, e_x) and
/// (0, e_y): at each t the images of two orthonormal vectors fix the rotation.
template <typename S>
LoopSO3<S> recover_loop(const Fibering<S>& fibering, int resolution) {
  const S2Point<S> ex(S(1), S(0), S(0));
  const S2Point<S> ey(S(0), S(1), S(0));
  auto cx = sample_fiber(fibering, ex, resolution);
  auto cy = sample_fiber(fibering, ey, resolution);
  std::vector<Rotation<S>> rots;
  rots.reserve(resolution + 1);
  for (int i = 0; i <= resolution; ++i) {
    Mat3<S> m;
    m.col(0) = cx.samples[i].y.vec();
    m.col(1) = cy.samples[i].y.vec();
    m.col(2) = m.col(0).cross(m.col(1));
    Eigen::Quaternion<S> q(m);
    rots.emplace_back(UnitQuaternion<S>::normalized(q));
  }
  return LoopSO3<S>::from_rotations(std::span<const Rotation<S>>(rots));
}

/// A point (t, y) where the fiber of a through (0, y) and the fiber of b
/// through (0, y) pass through different points of {t} x S^2, if the loops
/// differ by more than tol somewhere on the common refinement grid.
template <typename S>
std::optional<ProductPoint<S>> distinguishing_point(const Fibering<S>& a, const Fibering<S>& b,
                                                    S tol = S(kLoopTol)) {
  S best_t = S(0);
  S best = S(-1);
  for (S t : common_refinement<S>(a.loop().resolution(), b.loop().resolution())) {
    S d = geodesic_distance(a.loop()(t), b.loop()(t));
    if (d > best) {
      best = d;
      best_t = t;
    }
  }
  // Choose y orthogonal to the axis of b_t^{-1} a_t; it is moved by the full angle.
  const Rotation<S> rel = b.loop()(best_t).inverse() * a.loop()(best_t);
  Vec3<S> axis = rel.quaternion().vec();
  if (axis.norm() < S(1e-300)) return std::nullopt;
  axis.normalize();
  Vec3<S> trial = std::abs(axis.x()) < S(0.9) ? Vec3<S>::UnitX() : Vec3<S>::UnitY();
  S2Point<S> y = S2Point<S>::normalized(axis.cross(trial));
  if ((a.fiber_point(best_t, y).vec() - b.fiber_point(best_t, y).vec()).norm() <= tol) return std::nullopt;
  return ProductPoint<S>{best_t, y};
}

using Fiberingd = Fibering<double>;
using FiberCurved = FiberCurve<double>;

}  // namespace fiberkit
