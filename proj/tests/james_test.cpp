#include "fiberkit/james.hpp"
#include "fiberkit/random.hpp"

#include <gtest/gtest.h>

namespace fiberkit {
namespace {

const S2Pointd kNorth = S2Pointd::north();
const S2Pointd kSouth = S2Pointd::south();

std::vector<S2Pointd> random_letters(RandomSource& rng, int n) {
  std::vector<S2Pointd> out;
  for (int i = 0; i < n; ++i) out.push_back(rng.s2_point());
  return out;
}

TEST(Normalize, DeletesBasepoints) {
  const S2Pointd x(1, 0, 0);
  const S2Pointd y(0, 1, 0);
  const std::vector<S2Pointd> raw = {x, kNorth, y};
  const auto w = normalize(std::span<const S2Pointd>(raw));
  ASSERT_EQ(w.size(), 2u);
  EXPECT_EQ(w.letters()[0].vec(), x.vec());
  EXPECT_EQ(w.letters()[1].vec(), y.vec());

  const std::vector<S2Pointd> only = {kNorth, kNorth};
  EXPECT_TRUE(normalize(std::span<const S2Pointd>(only)).empty());
}

TEST(Normalize, UnchangedWithoutBasepointsAndIdempotent) {
  RandomSource rng(1);
  for (int i = 0; i < 50; ++i) {
    const auto letters = random_letters(rng, rng.uniform_int(0, 6));
    const auto w = normalize(std::span<const S2Pointd>(letters));
    ASSERT_EQ(w.size(), letters.size());
    const auto again = normalize(std::span<const S2Pointd>(w.letters()));
    ASSERT_EQ(again.size(), w.size());
    for (std::size_t k = 0; k < w.size(); ++k) EXPECT_EQ(again.letters()[k].vec(), letters[k].vec());
  }
}

TEST(Normalize, ToleranceAndValidation) {
  const S2Pointd near = S2Pointd::normalized(Eigen::Vector3d(1e-11, 0, 1));
  const S2Pointd off = S2Pointd::normalized(Eigen::Vector3d(1e-6, 0, 1));
  const std::vector<S2Pointd> raw = {near, off};
  EXPECT_EQ(normalize(std::span<const S2Pointd>(raw)).size(), 1u);
  EXPECT_THROW(JamesWordd({kNorth}), std::invalid_argument);
}

TEST(LambdaLoop, MeridianValues) {
  const auto m = lambda_loop(kNorth, 64);
  EXPECT_TRUE(m.endpoint_identified);
  EXPECT_LT(m.samples[32].chord(UnitQuaterniond(0, 0, 0, 1)), 1e-15);
  RandomSource rng(2);
  for (int i = 0; i < 20; ++i) {
    const auto x = rng.s2_point();
    const auto mx = lambda_loop(x);
    EXPECT_EQ(mx.samples.back().w(), -1.0);
    EXPECT_LT(sup_distance(mx.project(), gluck_loop(x)), 1e-12);
  }
}

TEST(LambdaPrime, AlwaysTrivial) {
  RandomSource rng(3);
  for (int i = 0; i < 30; ++i) {
    const auto x = rng.s2_point();
    EXPECT_EQ(classify(lambda_prime(x)), ComponentClass::kTrivial);
    EXPECT_EQ(classify(lambda_prime(x, 256, VerticalReturn::kForwardSouth)), ComponentClass::kTrivial);
  }
}

TEST(LambdaPrime, SouthIsOutAndBack) {
  const auto lp = lambda_prime(kSouth);
  EXPECT_LT(sup_distance(lp, concatenate(gluck_loop(kSouth), invert_loop(gluck_loop(kSouth)))), 1e-6);
  // Out and back along the same axis returns through the same rotations.
  for (double t : {0.1, 0.2, 0.35}) EXPECT_LT(geodesic_distance(lp(t), lp(1 - t)), 1e-9);
}

TEST(LambdaPrime, FirstHalfIsGluck) {
  RandomSource rng(4);
  for (int i = 0; i < 20; ++i) {
    const auto x = rng.s2_point();
    const auto lp = lambda_prime(x);
    const auto g = gluck_loop(x);
    for (int k = 0; k <= 50; ++k) {
      const double t = 0.5 * k / 50;
      EXPECT_LT(geodesic_distance(lp(t), g(2 * t)), 1e-9);
    }
  }
}

TEST(LambdaPrime, ForwardVariantIsGluckTimesSouth) {
  RandomSource rng(5);
  const auto x = rng.s2_point();
  const auto lp = lambda_prime(x, 128, VerticalReturn::kForwardSouth);
  EXPECT_LT(sup_distance(lp, concatenate(gluck_loop(x, 128), gluck_loop(kSouth, 128))), 1e-12);
}

TEST(JamesConcat, SingletonIsGluck) {
  RandomSource rng(6);
  const auto x = rng.s2_point();
  EXPECT_LT(sup_distance(james_concat(JamesWordd({x})), gluck_loop(x)), 1e-6);
}

TEST(JamesConcat, PiecewiseFormula) {
  RandomSource rng(7);
  const auto x1 = rng.s2_point();
  const auto x2 = rng.s2_point();
  const auto loop = james_concat(JamesWordd({x1, x2}));
  // k = 2, t = 1/4: kt = 1/2 inside the first letter.
  EXPECT_LT(geodesic_distance(loop(0.25), Rotationd(axis_angle_lift(x1, 0.5))), 1e-12);
  for (int i = 0; i < 100; ++i) {
    const int k = rng.uniform_int(1, 5);
    const auto letters = random_letters(rng, k);
    const auto l = james_concat(JamesWordd(letters));
    const double t = rng.uniform();
    const int j = std::min(static_cast<int>(k * t), k - 1);
    EXPECT_LT(geodesic_distance(l(t), Rotationd(axis_angle_lift(letters[j], k * t - j))), 1e-9);
  }
}

TEST(JamesConcat, LengthParityIsClass) {
  RandomSource rng(8);
  for (int k = 1; k <= 5; ++k) {
    const auto l = james_concat(JamesWordd(random_letters(rng, k)));
    EXPECT_EQ(classify(l), k % 2 ? ComponentClass::kNontrivial : ComponentClass::kTrivial);
  }
  EXPECT_EQ(classify(james_concat(JamesWordd())), ComponentClass::kTrivial);
}

TEST(HMap, FlipsClass) {
  RandomSource rng(9);
  EXPECT_EQ(classify(h_map(gluck_loop(rng.s2_point()))), ComponentClass::kTrivial);
  const auto hc = h_map(LoopSO3d::constant_identity());
  EXPECT_EQ(classify(hc), ComponentClass::kNontrivial);
  const auto gs = gluck_loop(kSouth);
  for (double t : {0.5, 0.6, 0.8, 1.0}) EXPECT_LT(geodesic_distance(hc(t), gs(2 * t - 1)), 1e-12);
  for (int i = 0; i < 50; ++i) {
    const auto g = rng.smooth_loop();
    EXPECT_NE(classify(h_map(g)), classify(g));
    EXPECT_EQ(classify(h_map(h_map(g))), classify(g));
  }
}

}  // namespace
}  // namespace fiberkit
