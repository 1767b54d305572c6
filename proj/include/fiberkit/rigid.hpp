#pragma once

// The rigid subgroup O(2) x Omega'O(3) of Diff(S^1 x S^2), where Omega'O(3)
// is the group of unbased loops in O(3) under pointwise multiplication.
// (alpha, beta_t) acts by (x, y) -> (alpha(x), beta_x(y)), and composition is
//   (alpha', beta'_t) . (alpha, beta_t) = (alpha' alpha, beta'_{alpha(t)} beta_t).

#include "fiberkit/loop.hpp"

#include <utility>

namespace fiberkit {

/// (alpha, beta, gamma) in O(2) x O(3) x Omega SO(3), acting by
/// (x, y) -> (alpha(x), beta(gamma_x(y))).
template <typename S>
struct RigidTriple {
  CircleMap<S> alpha;
  OrthogonalMap3<S> beta;
  LoopSO3<S> gamma;
};

/// Point of S^1 x S^2.
template <typename S>
struct ProductPoint {
  S t;
  S2Point<S> y;
};

/// (alpha, beta_t): beta_t = parity * rotation(path(t)); the path's lift
/// closes up to sign, so beta_0 = beta_1 as maps.
template <typename S>
class RigidDiffeo {
 public:
  using Scalar = S;

  RigidDiffeo() : path_(LiftedPath<S>::constant(UnitQuaternion<S>::identity(), kDefaultResolution)) {}
  RigidDiffeo(const CircleMap<S>& alpha, Sign parity, LiftedPath<S> path)
      : alpha_(alpha), parity_(parity), path_(std::move(path)) {}

  static RigidDiffeo identity() { return RigidDiffeo(); }

  /// (alpha, t -> beta) for a fixed beta.
  static RigidDiffeo constant(const CircleMap<S>& alpha, const OrthogonalMap3<S>& beta,
                              int resolution = kDefaultResolution) {
    return RigidDiffeo(alpha, beta.parity(),
                       LiftedPath<S>::constant(beta.rotation().quaternion(), resolution));
  }

  /// From beta sampled at t_i = i/N. All parities must agree and the first
  /// and last maps must coincide within kAlgebraTol.
  static RigidDiffeo from_samples(const CircleMap<S>& alpha, std::span<const OrthogonalMap3<S>> betas) {
    if (betas.size() < 2) throw std::invalid_argument("beta path needs at least two samples");
    const Sign parity = betas.front().parity();
    std::vector<Rotation<S>> rots;
    rots.reserve(betas.size());
    for (const auto& b : betas) {
      if (b.parity() != parity) throw std::invalid_argument("beta path changes component of O(3)");
      rots.push_back(b.rotation());
    }
    if (!approx_equal(betas.front(), betas.back()))
      throw std::invalid_argument("beta path does not close up");
    auto lift = canonical_lift(std::span<const Rotation<S>>(rots));
    return RigidDiffeo(alpha, parity, LiftedPath<S>::sampled(std::move(lift), S(kAlgebraTol)));
  }

  const CircleMap<S>& alpha() const { return alpha_; }
  Sign parity() const { return parity_; }
  const LiftedPath<S>& path() const { return path_; }
  int resolution() const { return path_.resolution(); }

  /// beta_t for t on the circle.
  OrthogonalMap3<S> beta(S t) const { return OrthogonalMap3<S>(path_.rotation_at(wrap01(t)), parity_); }

  std::vector<OrthogonalMap3<S>> samples(int n) const {
    std::vector<OrthogonalMap3<S>> out;
    for (int i = 0; i <= n; ++i) out.emplace_back(path_.rotation_at(S(i) / S(n)), parity_);
    return out;
  }

 private:
  CircleMap<S> alpha_;
  Sign parity_ = Sign::kPlus;
  LiftedPath<S> path_;
};

/// (alpha(x), beta_x(y)).
template <typename S>
ProductPoint<S> apply_to_point(const RigidDiffeo<S>& f, S x, const S2Point<S>& y) {
  return {f.alpha()(x), f.beta(x).apply(y)};
}

/// (alpha(x), beta(gamma_x(y))).
template <typename S>
ProductPoint<S> apply_to_point(const RigidTriple<S>& f, S x, const S2Point<S>& y) {
  return {f.alpha(x), f.beta.apply(f.gamma(wrap01(x)).apply(y))};
}

/// Function composition f' o f.
template <typename S>
RigidDiffeo<S> compose(const RigidDiffeo<S>& f_outer, const RigidDiffeo<S>& f_inner) {
  using F = typename LiftedPath<S>::Factor;
  auto path = LiftedPath<S>::product({F{f_outer.path(), f_inner.alpha()}, F{f_inner.path()}});
  return RigidDiffeo<S>(f_outer.alpha() * f_inner.alpha(), f_outer.parity() * f_inner.parity(),
                        std::move(path));
}

template <typename S>
RigidDiffeo<S> operator*(const RigidDiffeo<S>& f_outer, const RigidDiffeo<S>& f_inner) {
  return compose(f_outer, f_inner);
}

/// (alpha^{-1}, beta_{alpha^{-1}(t)}^{-1}).
template <typename S>
RigidDiffeo<S> inverse(const RigidDiffeo<S>& f) {
  using F = typename LiftedPath<S>::Factor;
  const CircleMap<S> ainv = f.alpha().inverse();
  return RigidDiffeo<S>(ainv, f.parity(), LiftedPath<S>::product({F{f.path(), ainv, true}}));
}

/// Splits f at the circle basepoint b: beta = beta_b and
/// gamma_t = beta_b^{-1} beta_{b+t}, an identity-based loop in SO(3).
/// With b != 0 the triple describes f precomposed with the rotation t -> t + b
/// of the loop parameter; b = 0 reproduces f exactly.
template <typename S>
RigidTriple<S> factorize(const RigidDiffeo<S>& f, S basepoint = S(0)) {
  using F = typename LiftedPath<S>::Factor;
  const int n = f.resolution();
  const UnitQuaternion<S> qb = f.path().at_extended(basepoint);
  auto gamma = LiftedPath<S>::product({F{LiftedPath<S>::constant(qb.conjugate(), n)},
                                        F{f.path(), CircleMap<S>::rotation(basepoint)}});
  return {f.alpha(), OrthogonalMap3<S>(Rotation<S>(qb), f.parity()),
          LoopSO3<S>::from_path(gamma.rebased())};
}

/// (alpha, beta, gamma) -> (alpha, beta_t = beta gamma_t).
template <typename S>
RigidDiffeo<S> unfactorize(const RigidTriple<S>& triple) {
  using F = typename LiftedPath<S>::Factor;
  const int n = triple.gamma.resolution();
  auto path = LiftedPath<S>::product(
      {F{LiftedPath<S>::constant(triple.beta.rotation().quaternion(), n)}, F{triple.gamma.path()}});
  return RigidDiffeo<S>(triple.alpha, triple.beta.parity(), std::move(path));
}

using RigidDiffeod = RigidDiffeo<double>;
using RigidTripled = RigidTriple<double>;
using ProductPointd = ProductPoint<double>;

}  // namespace fiberkit
