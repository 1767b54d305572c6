#pragma once

// Exact-formula algebra for S^3, SO(3), O(3), O(2) and their actions on S^2
// and S^1. Everything is templated on the scalar type; the `d` aliases at the
// bottom are what the rest of the library instantiates.

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fiberkit {

/// Tolerance for exact algebra (norms, matrix equality, pointwise actions).
inline constexpr double kAlgebraTol = 1e-9;
/// Tolerance for loop comparisons in radians.
inline constexpr double kLoopTol = 1e-6;

/// A sign in {+1, -1}: orientation of a circle map, parity of an O(3) element,
/// or the endpoint of a lift through S^3 -> SO(3).
enum class Sign : int { kPlus = 1, kMinus = -1 };

constexpr int to_int(Sign s) { return static_cast<int>(s); }
constexpr Sign operator*(Sign a, Sign b) {
  return to_int(a) * to_int(b) > 0 ? Sign::kPlus : Sign::kMinus;
}
inline Sign sign_from_int(int v) {
  if (v == 1) return Sign::kPlus;
  if (v == -1) return Sign::kMinus;
  throw std::invalid_argument("sign must be +1 or -1");
}

template <typename S>
using Vec3 = Eigen::Matrix<S, 3, 1>;
template <typename S>
using Mat3 = Eigen::Matrix<S, 3, 3>;
template <typename S>
using Vec4 = Eigen::Matrix<S, 4, 1>;

/// Reduces a circle parameter to [0, 1).
template <typename S>
S wrap01(S t) {
  S r = t - std::floor(t);
  return r >= S(1) ? S(0) : r;
}

/// Distance between two circle parameters on R/Z.
template <typename S>
S circle_distance(S a, S b) {
  S d = wrap01(a - b);
  return std::min(d, S(1) - d);
}

/// Point of S^3, stored as an Eigen quaternion with w first in the API.
template <typename S>
class UnitQuaternion {
 public:
  using Scalar = S;

  UnitQuaternion() : q_(S(1), S(0), S(0), S(0)) {}

  /// Throws std::invalid_argument unless w^2+x^2+y^2+z^2 = 1 within kAlgebraTol.
  UnitQuaternion(S w, S x, S y, S z) : q_(w, x, y, z) {
    using std::abs;
    if (!(abs(q_.squaredNorm() - S(1)) <= S(kAlgebraTol)))
      throw std::invalid_argument("quaternion is not unit length");
  }

  /// Projects any nonzero quaternion onto S^3.
  static UnitQuaternion normalized(const Eigen::Quaternion<S>& q) {
    S n = q.norm();
    if (!(n > S(0)) || !std::isfinite(static_cast<double>(n)))
      throw std::invalid_argument("cannot normalize a zero quaternion");
    return UnitQuaternion(Eigen::Quaternion<S>(q.coeffs() / n));
  }
  static UnitQuaternion normalized(S w, S x, S y, S z) {
    return normalized(Eigen::Quaternion<S>(w, x, y, z));
  }

  static UnitQuaternion identity() { return UnitQuaternion(); }

  S w() const { return q_.w(); }
  S x() const { return q_.x(); }
  S y() const { return q_.y(); }
  S z() const { return q_.z(); }
  Vec3<S> vec() const { return q_.vec(); }
  Vec4<S> wxyz() const { return Vec4<S>(q_.w(), q_.x(), q_.y(), q_.z()); }
  const Eigen::Quaternion<S>& quat() const { return q_; }

  UnitQuaternion conjugate() const { return UnitQuaternion(q_.conjugate()); }
  UnitQuaternion operator-() const {
    return UnitQuaternion(Eigen::Quaternion<S>(-q_.coeffs()));
  }
  UnitQuaternion operator*(Sign s) const { return s == Sign::kPlus ? *this : -*this; }

  S dot(const UnitQuaternion& o) const { return q_.coeffs().dot(o.q_.coeffs()); }

  /// Euclidean distance in R^4.
  S chord(const UnitQuaternion& o) const { return (q_.coeffs() - o.q_.coeffs()).norm(); }

 private:
  explicit UnitQuaternion(const Eigen::Quaternion<S>& q) : q_(q) {}

  Eigen::Quaternion<S> q_;
};

/// Hamilton product, renormalized.
template <typename S>
UnitQuaternion<S> quat_mul(const UnitQuaternion<S>& a, const UnitQuaternion<S>& b) {
  return UnitQuaternion<S>::normalized(a.quat() * b.quat());
}

template <typename S>
UnitQuaternion<S> operator*(const UnitQuaternion<S>& a, const UnitQuaternion<S>& b) {
  return quat_mul(a, b);
}

/// Arc-length interpolation on S^3 from a (u = 0) to b (u = 1). No sign
/// flipping: callers pass consecutive samples of a continuous lift.
template <typename S>
UnitQuaternion<S> slerp(const UnitQuaternion<S>& a, const UnitQuaternion<S>& b, S u) {
  using std::atan2;
  using std::sin;
  const auto& ca = a.quat().coeffs();
  const auto& cb = b.quat().coeffs();
  S omega = S(2) * atan2((ca - cb).norm(), (ca + cb).norm());
  if (omega < S(1e-8)) {
    return UnitQuaternion<S>::normalized(Eigen::Quaternion<S>((S(1) - u) * ca + u * cb));
  }
  S s = sin(omega);
  S wa = sin((S(1) - u) * omega) / s;
  S wb = sin(u * omega) / s;
  return UnitQuaternion<S>::normalized(Eigen::Quaternion<S>(wa * ca + wb * cb));
}

/// Point of S^2.
template <typename S>
class S2Point {
 public:
  using Scalar = S;

  S2Point() : v_(S(0), S(0), S(1)) {}

  /// Throws std::invalid_argument unless |v| = 1 within kAlgebraTol.
  explicit S2Point(const Vec3<S>& v) : v_(v) {
    using std::abs;
    if (!(abs(v_.norm() - S(1)) <= S(kAlgebraTol)))
      throw std::invalid_argument("point is not on the unit sphere");
  }
  S2Point(S x, S y, S z) : S2Point(Vec3<S>(x, y, z)) {}

  static S2Point normalized(const Vec3<S>& v) {
    S n = v.norm();
    if (!(n > S(0)) || !std::isfinite(static_cast<double>(n)))
      throw std::invalid_argument("cannot normalize a zero vector onto S^2");
    return S2Point(v / n);
  }

  static S2Point north() { return S2Point(S(0), S(0), S(1)); }
  static S2Point south() { return S2Point(S(0), S(0), S(-1)); }

  const Vec3<S>& vec() const { return v_; }
  S operator[](int i) const { return v_[i]; }
  S2Point operator-() const { return S2Point(Vec3<S>(-v_)); }

  /// Great-circle angle to another point.
  S angle_to(const S2Point& o) const {
    using std::atan2;
    return atan2(v_.cross(o.v_).norm(), v_.dot(o.v_));
  }

 private:
  Vec3<S> v_;
};

/// Element of SO(3), represented by one of its two unit-quaternion lifts.
template <typename S>
class Rotation {
 public:
  using Scalar = S;

  Rotation() = default;
  explicit Rotation(const UnitQuaternion<S>& q) : q_(q) {}

  static Rotation identity() { return Rotation(); }
  static Rotation about(const S2Point<S>& axis, S angle) {
    using std::cos;
    using std::sin;
    Vec3<S> v = sin(angle / S(2)) * axis.vec();
    return Rotation(UnitQuaternion<S>::normalized(cos(angle / S(2)), v.x(), v.y(), v.z()));
  }

  const UnitQuaternion<S>& quaternion() const { return q_; }

  Vec3<S> apply(const Vec3<S>& v) const { return q_.quat()._transformVector(v); }
  S2Point<S> apply(const S2Point<S>& p) const { return S2Point<S>::normalized(apply(p.vec())); }

  Mat3<S> matrix() const { return q_.quat().toRotationMatrix(); }

  Rotation inverse() const { return Rotation(q_.conjugate()); }
  Rotation operator*(const Rotation& o) const { return Rotation(q_ * o.q_); }

  /// Rotation angle in [0, pi].
  S angle() const {
    using std::abs;
    using std::atan2;
    return S(2) * atan2(q_.vec().norm(), abs(q_.w()));
  }

 private:
  UnitQuaternion<S> q_;
};

/// q y q* as a unit vector.
template <typename S>
S2Point<S> rotate(const Rotation<S>& r, const S2Point<S>& y) {
  return r.apply(y);
}

/// Angle of r1 r2^{-1} in [0, pi]. Equal to 2 arccos(|<q1, q2>|) but evaluated
/// through atan2 so that near-equal rotations keep full precision.
template <typename S>
S geodesic_distance(const Rotation<S>& r1, const Rotation<S>& r2) {
  using std::atan2;
  const auto& a = r1.quaternion().quat().coeffs();
  auto b = r2.quaternion().quat().coeffs();
  if (a.dot(b) < S(0)) b = -b;
  return S(4) * atan2((a - b).norm(), (a + b).norm());
}

/// Lift of the rotation by 2 pi t about p: (cos pi t, sin pi t p).
template <typename S>
UnitQuaternion<S> axis_angle_lift(const S2Point<S>& p, S t) {
  using std::cos;
  using std::sin;
  const S a = std::numbers::pi_v<S> * t;
  const S s = sin(a);
  return UnitQuaternion<S>::normalized(cos(a), s * p[0], s * p[1], s * p[2]);
}

/// Element of O(3): y -> parity * (q y q*). The antipodal map is central, so
/// every improper element is minus a rotation.
template <typename S>
class OrthogonalMap3 {
 public:
  using Scalar = S;

  OrthogonalMap3() = default;
  explicit OrthogonalMap3(const Rotation<S>& r, Sign parity = Sign::kPlus)
      : rot_(r), parity_(parity) {}

  static OrthogonalMap3 identity() { return OrthogonalMap3(); }

  const Rotation<S>& rotation() const { return rot_; }
  Sign parity() const { return parity_; }
  S determinant() const { return S(to_int(parity_)); }

  Vec3<S> apply(const Vec3<S>& v) const { return S(to_int(parity_)) * rot_.apply(v); }
  S2Point<S> apply(const S2Point<S>& p) const { return S2Point<S>::normalized(apply(p.vec())); }

  Mat3<S> matrix() const { return S(to_int(parity_)) * rot_.matrix(); }

  OrthogonalMap3 inverse() const { return OrthogonalMap3(rot_.inverse(), parity_); }
  OrthogonalMap3 operator*(const OrthogonalMap3& o) const {
    return OrthogonalMap3(rot_ * o.rot_, parity_ * o.parity_);
  }

  /// this o rho o this^{-1}; the parity cancels.
  Rotation<S> conjugate(const Rotation<S>& rho) const { return rot_ * rho * rot_.inverse(); }

 private:
  Rotation<S> rot_;
  Sign parity_ = Sign::kPlus;
};

/// Matrix equality, insensitive to the q <-> -q ambiguity.
template <typename S>
bool approx_equal(const OrthogonalMap3<S>& a, const OrthogonalMap3<S>& b, S tol = S(kAlgebraTol)) {
  return (a.matrix() - b.matrix()).cwiseAbs().maxCoeff() <= tol;
}

/// Element of O(2) acting on R/Z: t -> orientation * t + offset (mod 1).
template <typename S>
class CircleMap {
 public:
  using Scalar = S;

  CircleMap() = default;
  CircleMap(S offset, Sign orientation) : offset_(wrap01(offset)), orientation_(orientation) {}

  static CircleMap identity() { return CircleMap(); }
  static CircleMap rotation(S offset) { return CircleMap(offset, Sign::kPlus); }
  static CircleMap reflection(S offset) { return CircleMap(offset, Sign::kMinus); }

  S offset() const { return offset_; }
  Sign orientation() const { return orientation_; }

  /// Affine value before reduction mod 1; continuous in t.
  S unwrapped(S t) const { return S(to_int(orientation_)) * t + offset_; }
  S operator()(S t) const { return wrap01(unwrapped(t)); }

  /// (this o other)(t) = this(other(t)).
  CircleMap operator*(const CircleMap& other) const {
    return CircleMap(S(to_int(orientation_)) * other.offset_ + offset_,
                     orientation_ * other.orientation_);
  }
  CircleMap inverse() const {
    return CircleMap(-S(to_int(orientation_)) * offset_, orientation_);
  }

 private:
  S offset_ = S(0);
  Sign orientation_ = Sign::kPlus;
};

using UnitQuaterniond = UnitQuaternion<double>;
using S2Pointd = S2Point<double>;
using Rotationd = Rotation<double>;
using OrthogonalMap3d = OrthogonalMap3<double>;
using CircleMapd = CircleMap<double>;

}  // namespace fiberkit
