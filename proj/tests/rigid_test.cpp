#include "fiberkit/random.hpp"
#include "fiberkit/rigid.hpp"

#include <gtest/gtest.h>

#include <numbers>

namespace fiberkit {
namespace {

double point_gap(const ProductPointd& a, const ProductPointd& b) {
  return std::max(circle_distance(a.t, b.t), (a.y.vec() - b.y.vec()).norm());
}

double action_gap(const RigidDiffeod& f, const RigidDiffeod& g, RandomSource& rng, int points = 100) {
  double worst = 0;
  for (int i = 0; i < points; ++i) {
    const double x = rng.uniform();
    const auto y = rng.s2_point();
    worst = std::max(worst, point_gap(apply_to_point(f, x, y), apply_to_point(g, x, y)));
  }
  return worst;
}

TEST(ApplyToPoint, IdentityAndConstant) {
  RandomSource rng(1);
  const auto id = RigidDiffeod::identity();
  const auto beta = rng.orthogonal_map();
  const auto f = RigidDiffeod::constant(CircleMapd::identity(), beta);
  for (int i = 0; i < 20; ++i) {
    const double x = rng.uniform();
    const auto y = rng.s2_point();
    EXPECT_LT(point_gap(apply_to_point(id, x, y), {x, y}), 1e-15);
    EXPECT_LT(point_gap(apply_to_point(f, x, y), {x, S2Pointd::normalized(beta.matrix() * y.vec())}), 1e-12);
  }
}

TEST(ApplyToPoint, TripleAndDiffeoFormsAgree) {
  RandomSource rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const auto triple = rng.rigid_triple();
    const auto f = unfactorize(triple);
    for (int i = 0; i < 20; ++i) {
      const double x = rng.uniform();
      const auto y = rng.s2_point();
      const Eigen::Vector3d expected = triple.beta.matrix() * (triple.gamma(x).matrix() * y.vec());
      const auto p = apply_to_point(triple, x, y);
      EXPECT_LT((p.y.vec() - expected).norm(), 1e-12);
      EXPECT_LT(point_gap(p, apply_to_point(f, x, y)), 1e-12);
    }
  }
}

TEST(FromSamples, ValidatesClosureAndParity) {
  const auto a = OrthogonalMap3d(Rotationd::about(S2Pointd::north(), 0.3));
  const auto b = OrthogonalMap3d(Rotationd::about(S2Pointd::north(), 0.6));
  const auto a_neg = OrthogonalMap3d(a.rotation(), Sign::kMinus);
  const std::vector<OrthogonalMap3d> open = {a, b};
  const std::vector<OrthogonalMap3d> mixed = {a, a_neg, a};
  const std::vector<OrthogonalMap3d> closed = {a, b, a};
  EXPECT_THROW(RigidDiffeod::from_samples(CircleMapd::identity(), open), std::invalid_argument);
  EXPECT_THROW(RigidDiffeod::from_samples(CircleMapd::identity(), mixed), std::invalid_argument);
  const auto f = RigidDiffeod::from_samples(CircleMapd::identity(), closed);
  EXPECT_TRUE(approx_equal(f.beta(0.0), a));
  EXPECT_TRUE(approx_equal(f.beta(0.5), b));
  EXPECT_TRUE(approx_equal(f.beta(1.0), a));
}

TEST(Compose, IdentityIsNeutral) {
  RandomSource rng(3);
  for (int i = 0; i < 20; ++i) {
    const auto f = rng.rigid_diffeo();
    EXPECT_LT(action_gap(compose(f, RigidDiffeod::identity()), f, rng), 1e-12);
    EXPECT_LT(action_gap(compose(RigidDiffeod::identity(), f), f, rng), 1e-12);
  }
}

TEST(Compose, MatchesFunctionComposition) {
  RandomSource rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    const auto f1 = rng.rigid_diffeo();
    const auto f2 = rng.rigid_diffeo();
    const auto c = compose(f2, f1);
    EXPECT_EQ(c.parity(), f2.parity() * f1.parity());
    for (int i = 0; i < 100; ++i) {
      const double x = rng.uniform();
      const auto y = rng.s2_point();
      const auto inner = apply_to_point(f1, x, y);
      EXPECT_LT(point_gap(apply_to_point(c, x, y), apply_to_point(f2, inner.t, inner.y)), 1e-9);
    }
  }
}

TEST(Compose, Associative) {
  RandomSource rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = rng.rigid_diffeo();
    const auto b = rng.rigid_diffeo();
    const auto c = rng.rigid_diffeo();
    EXPECT_LT(action_gap((a * b) * c, a * (b * c), rng), 1e-9);
  }
}

TEST(Inverse, OfIdentityAndConstant) {
  RandomSource rng(6);
  EXPECT_LT(action_gap(inverse(RigidDiffeod::identity()), RigidDiffeod::identity(), rng), 1e-15);
  const double theta = 0.3;
  const auto beta = rng.orthogonal_map();
  const auto f = RigidDiffeod::constant(CircleMapd::rotation(theta), beta);
  const auto expected = RigidDiffeod::constant(CircleMapd::rotation(-theta), beta.inverse());
  EXPECT_LT(action_gap(inverse(f), expected, rng), 1e-12);
}

TEST(Inverse, RoundTrips) {
  RandomSource rng(7);
  const auto id = RigidDiffeod::identity();
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = rng.rigid_diffeo();
    const auto g = inverse(f);
    EXPECT_LT(action_gap(f * g, id, rng, 20), 1e-9);
    EXPECT_LT(action_gap(g * f, id, rng, 20), 1e-9);
  }
}

TEST(Factorize, ConstantPathGivesConstantLoop) {
  RandomSource rng(8);
  const auto alpha = rng.circle_map();
  const auto beta = rng.orthogonal_map();
  const auto t = factorize(RigidDiffeod::constant(alpha, beta));
  EXPECT_TRUE(approx_equal(t.beta, beta));
  EXPECT_EQ(t.alpha.orientation(), alpha.orientation());
  EXPECT_NEAR(t.alpha.offset(), alpha.offset(), 1e-15);
  EXPECT_LT(sup_distance(t.gamma, LoopSO3d::constant_identity()), 1e-12);
}

TEST(Factorize, RoundTrips) {
  RandomSource rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = rng.rigid_diffeo();
    const auto triple = factorize(f);
    EXPECT_LT(triple.gamma.lift(0.0).chord(UnitQuaterniond::identity()), 1e-12);
    EXPECT_LT(action_gap(unfactorize(triple), f, rng, 20), 1e-9);

    const auto t2 = rng.rigid_triple();
    const auto back = factorize(unfactorize(t2));
    EXPECT_TRUE(approx_equal(back.beta, t2.beta));
    EXPECT_LT(sup_distance(back.gamma, t2.gamma), 1e-9);
  }
}

TEST(Factorize, ClassIndependentOfBasepoint) {
  RandomSource rng(10);
  for (int trial = 0; trial < 50; ++trial) {
    const auto f = rng.rigid_diffeo();
    const double b = rng.uniform();
    EXPECT_EQ(classify(factorize(f).gamma), classify(factorize(f, b).gamma));
  }
}

TEST(Factorize, ParityLandsInBeta) {
  RandomSource rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto f = rng.rigid_diffeo();
    const auto triple = factorize(f);
    EXPECT_EQ(triple.beta.parity(), f.parity());
    EXPECT_NEAR(triple.beta.matrix().determinant(), to_int(f.parity()), 1e-9);
  }
}

}  // namespace
}  // namespace fiberkit
