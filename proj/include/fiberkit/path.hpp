#pragma once

// Closed paths in SO(3) carried by a continuous lift to S^3.
//
// A LiftedPath is an immutable expression: sampled leaves (slerp between
// consecutive lift samples) combined by pointwise products of reparameterized
// factors and by concatenation. Evaluating a composite walks the expression,
// so reparameterizing by an arbitrary circle map costs no resampling error.
//
// Closure: at(1) = closure() * at(0). The periodic extension
//   at_extended(u) = closure^floor(u) * at(u - floor(u))
// is a continuous lift on all of R, which is what circle reparameterization
// evaluates.

#include "fiberkit/errors.hpp"
#include "fiberkit/rotation.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace fiberkit {

inline constexpr int kDefaultResolution = 256;

template <typename S>
class LiftedPath;

namespace detail {

template <typename S>
struct PathNode {
  virtual ~PathNode() = default;
  virtual UnitQuaternion<S> at(S t) const = 0;
  Sign closure = Sign::kPlus;
  int resolution = 1;
};

template <typename S>
struct SampledNode final : PathNode<S> {
  std::vector<UnitQuaternion<S>> samples;

  UnitQuaternion<S> at(S t) const override {
    const int n = static_cast<int>(samples.size()) - 1;
    S x = std::clamp(t, S(0), S(1)) * S(n);
    int i = std::min(static_cast<int>(std::floor(x)), n - 1);
    S u = x - S(i);
    if (u <= S(0)) return samples[i];
    if (u >= S(1)) return samples[i + 1];
    return slerp(samples[i], samples[i + 1], u);
  }
};

template <typename S>
struct ConstantNode final : PathNode<S> {
  UnitQuaternion<S> value;
  UnitQuaternion<S> at(S) const override { return value; }
};

template <typename S>
struct Factor {
  std::shared_ptr<const PathNode<S>> node;
  CircleMap<S> reparam;
  bool inverted = false;
};

template <typename S>
UnitQuaternion<S> at_extended(const PathNode<S>& node, S u) {
  S k = std::floor(u);
  S frac = u - k;
  if (frac >= S(1)) {
    frac = S(0);
    k += S(1);
  }
  UnitQuaternion<S> q = node.at(frac);
  if (node.closure == Sign::kMinus && std::fmod(std::abs(k), S(2)) == S(1)) q = -q;
  return q;
}

template <typename S>
struct ProductNode final : PathNode<S> {
  std::vector<Factor<S>> factors;

  UnitQuaternion<S> at(S t) const override {
    Eigen::Quaternion<S> acc(S(1), S(0), S(0), S(0));
    for (const auto& f : factors) {
      UnitQuaternion<S> q = at_extended(*f.node, f.reparam.unwrapped(t));
      acc = acc * (f.inverted ? q.conjugate() : q).quat();
    }
    return UnitQuaternion<S>::normalized(acc);
  }
};

// Children are based paths (at(0) = 1); child k is scaled by the product of
// the closures of children before it so the concatenated lift is continuous.
template <typename S>
struct ConcatNode final : PathNode<S> {
  std::vector<std::shared_ptr<const PathNode<S>>> children;
  std::vector<Sign> prefix;

  UnitQuaternion<S> at(S t) const override {
    const int k = static_cast<int>(children.size());
    S x = std::clamp(t, S(0), S(1)) * S(k);
    int i = std::min(static_cast<int>(std::floor(x)), k - 1);
    return children[i]->at(x - S(i)) * prefix[i];
  }
};

}  // namespace detail

/// Closed path in SO(3) with a continuous lift to S^3 (not necessarily based).
template <typename S>
class LiftedPath {
 public:
  using Scalar = S;

  /// One factor of a pointwise product: t -> path(reparam(t)), optionally
  /// conjugated (pointwise inverse).
  struct Factor {
    LiftedPath path;
    CircleMap<S> reparam = CircleMap<S>::identity();
    bool inverted = false;
  };

  /// Sampled lift at t_i = i / N. Consecutive samples must have positive inner
  /// product; the last sample must project to the same rotation as the first
  /// within closure_tol radians and is snapped to +-(first sample).
  static LiftedPath sampled(std::vector<UnitQuaternion<S>> samples, S closure_tol = S(kLoopTol)) {
    if (samples.size() < 2) throw std::invalid_argument("a sampled path needs at least two samples");
    for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
      if (!(samples[i].dot(samples[i + 1]) > S(0)))
        throw InsufficientResolution("lift samples " + std::to_string(i) + " and " +
                                     std::to_string(i + 1) + " are not sign-consistent");
    }
    const auto& first = samples.front();
    auto& last = samples.back();
    if (geodesic_distance(Rotation<S>(first), Rotation<S>(last)) > closure_tol)
      throw std::invalid_argument("path does not close up in SO(3)");
    Sign closure = first.dot(last) > S(0) ? Sign::kPlus : Sign::kMinus;
    last = first * closure;

    auto node = std::make_shared<detail::SampledNode<S>>();
    node->resolution = static_cast<int>(samples.size()) - 1;
    node->closure = closure;
    node->samples = std::move(samples);
    return LiftedPath(std::move(node));
  }

  static LiftedPath constant(const UnitQuaternion<S>& q, int resolution = 1) {
    auto node = std::make_shared<detail::ConstantNode<S>>();
    node->value = q;
    node->resolution = resolution;
    return LiftedPath(std::move(node));
  }

  /// t -> prod_i factor_i(t), left to right.
  static LiftedPath product(const std::vector<Factor>& factors) {
    if (factors.empty()) return constant(UnitQuaternion<S>::identity());
    auto node = std::make_shared<detail::ProductNode<S>>();
    Sign closure = Sign::kPlus;
    int res = 1;
    for (const auto& f : factors) {
      node->factors.push_back({f.path.node_, f.reparam, f.inverted});
      closure = closure * f.path.closure();
      res = std::max(res, f.path.resolution());
    }
    node->closure = closure;
    node->resolution = res;
    return LiftedPath(std::move(node));
  }

  /// Equal-share concatenation of based paths. Nominal resolution is
  /// k * max(N_i), so equal inputs give sum(N_i).
  static LiftedPath concatenate(const std::vector<LiftedPath>& parts) {
    if (parts.empty()) throw std::invalid_argument("nothing to concatenate");
    if (parts.size() == 1) return parts.front();
    auto node = std::make_shared<detail::ConcatNode<S>>();
    Sign running = Sign::kPlus;
    int max_res = 1;
    for (const auto& p : parts) {
      node->children.push_back(p.node_);
      node->prefix.push_back(running);
      running = running * p.closure();
      max_res = std::max(max_res, p.resolution());
    }
    node->closure = running;
    node->resolution = max_res * static_cast<int>(parts.size());
    return LiftedPath(std::move(node));
  }

  UnitQuaternion<S> at(S t) const { return node_->at(t); }
  UnitQuaternion<S> at_extended(S u) const { return detail::at_extended(*node_, u); }
  Rotation<S> rotation_at(S t) const { return Rotation<S>(at(t)); }

  Sign closure() const { return node_->closure; }
  int resolution() const { return node_->resolution; }

  /// Lift samples at i / n, i = 0..n.
  std::vector<UnitQuaternion<S>> samples(int n) const {
    std::vector<UnitQuaternion<S>> out;
    out.reserve(n + 1);
    for (int i = 0; i <= n; ++i) out.push_back(at(S(i) / S(n)));
    return out;
  }
  std::vector<UnitQuaternion<S>> samples() const { return samples(resolution()); }

  /// Right translation making the path start at the identity.
  LiftedPath rebased() const {
    return product({Factor{*this}, Factor{constant(at(S(0)).conjugate(), resolution())}});
  }

 private:
  explicit LiftedPath(std::shared_ptr<const detail::PathNode<S>> node) : node_(std::move(node)) {}

  std::shared_ptr<const detail::PathNode<S>> node_;
};

/// Sup of the rotation distance over the union of both sample grids and the
/// midpoints between consecutive grid points.
template <typename S>
std::vector<S> common_refinement(int n_a, int n_b) {
  std::vector<S> grid;
  grid.reserve(n_a + n_b + 2);
  for (int i = 0; i <= n_a; ++i) grid.push_back(S(i) / S(n_a));
  for (int j = 0; j <= n_b; ++j) grid.push_back(S(j) / S(n_b));
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end(),
                         [](S a, S b) { return std::abs(a - b) < S(1e-15); }),
             grid.end());
  const std::size_t base = grid.size();
  for (std::size_t i = 0; i + 1 < base; ++i) grid.push_back((grid[i] + grid[i + 1]) / S(2));
  std::sort(grid.begin(), grid.end());
  return grid;
}

template <typename S>
S sup_distance(const LiftedPath<S>& a, const LiftedPath<S>& b) {
  S worst = S(0);
  for (S t : common_refinement<S>(a.resolution(), b.resolution()))
    worst = std::max(worst, geodesic_distance(a.rotation_at(t), b.rotation_at(t)));
  return worst;
}

using LiftedPathd = LiftedPath<double>;

}  // namespace fiberkit
