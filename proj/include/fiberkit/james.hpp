#pragma once

// Reduced-product words on S^2 (basepoint at the north pole), the meridian
// loops lambda_x, the out-and-back loops lambda'_x, equal-share
// concatenation lambda^k, and the component swap h.

#include "fiberkit/loop.hpp"

namespace fiberkit {

/// Reduced word in J(S^2): no letter equals the basepoint n.
template <typename S>
class JamesWord {
 public:
  using Scalar = S;

  JamesWord() = default;
  explicit JamesWord(std::vector<S2Point<S>> letters) : letters_(std::move(letters)) {
    for (const auto& x : letters_)
      if (is_basepoint(x)) throw std::invalid_argument("reduced word contains the basepoint");
  }

  static bool is_basepoint(const S2Point<S>& x) {
    return (x.vec() - S2Point<S>::north().vec()).norm() <= S(kAlgebraTol);
  }

  const std::vector<S2Point<S>>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

 private:
  std::vector<S2Point<S>> letters_;
};

/// Deletes every basepoint letter, keeping the order of the rest.
template <typename S>
JamesWord<S> normalize(std::span<const S2Point<S>> raw) {
  std::vector<S2Point<S>> kept;
  for (const auto& x : raw)
    if (!JamesWord<S>::is_basepoint(x)) kept.push_back(x);
  return JamesWord<S>(std::move(kept));
}

/// The suspension meridian through x in S^3: t -> (cos pi t, sin pi t x),
/// running from +1 to -1. Both ends are the basepoint of the suspension
/// (the collapsed S^2 x {0} and S^2 x {1}), which the flag records.
template <typename S>
struct MeridianPath {
  std::vector<UnitQuaternion<S>> samples;
  bool endpoint_identified = true;

  /// Projection to SO(3); closes up because -1 maps to the identity.
  LoopSO3<S> project() const { return LoopSO3<S>::from_samples(samples); }
};

template <typename S>
MeridianPath<S> lambda_loop(const S2Point<S>& x, int resolution = kDefaultResolution) {
  if (resolution < 8) throw std::invalid_argument("lambda_loop needs resolution >= 8");
  MeridianPath<S> m;
  m.samples.reserve(resolution + 1);
  for (int i = 0; i <= resolution; ++i) m.samples.push_back(axis_angle_lift(x, S(i) / S(resolution)));
  m.samples.back() = -UnitQuaternion<S>::identity();
  return m;
}

/// How lambda'_x comes back from -1 to +1 along the vertical axis.
enum class VerticalReturn {
  /// Back down the ray through s: G_x * G_s^{-1}.
  kReversedSouth,
  /// Continue with a full turn about s: G_x * G_s.
  kForwardSouth,
};

/// Out to -1 along the meridian through x, then back to +1 vertically.
template <typename S>
LoopSO3<S> lambda_prime(const S2Point<S>& x, int resolution = kDefaultResolution,
                        VerticalReturn ret = VerticalReturn::kReversedSouth) {
  const LoopSO3<S> out = gluck_loop(x, resolution);
  const LoopSO3<S> vertical = gluck_loop(S2Point<S>::south(), resolution);
  return concatenate(out, ret == VerticalReturn::kReversedSouth ? invert_loop(vertical) : vertical);
}

/// lambda^k of the word, projected to SO(3). The empty word gives the
/// constant loop.
template <typename S>
LoopSO3<S> james_concat(const JamesWord<S>& word, int resolution = kDefaultResolution) {
  if (word.empty()) return LoopSO3<S>::constant_identity(resolution);
  std::vector<LoopSO3<S>> parts;
  parts.reserve(word.size());
  for (const auto& x : word.letters()) parts.push_back(lambda_loop(x, resolution).project());
  return concatenate(std::span<const LoopSO3<S>>(parts));
}

/// h(gamma) = gamma * G_s: appends the downward vertical loop, which flips
/// the component.
template <typename S>
LoopSO3<S> h_map(const LoopSO3<S>& gamma) {
  return concatenate(gamma, gluck_loop(S2Point<S>::south(), std::max(8, gamma.resolution())));
}

using JamesWordd = JamesWord<double>;

}  // namespace fiberkit
