#include "fiberkit/verify.hpp"

#include "fiberkit/fibering.hpp"
#include "fiberkit/james.hpp"
#include "fiberkit/nullhomotopy.hpp"
#include "fiberkit/random.hpp"
#include "oracles/crossing_parity.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace fiberkit {

namespace {

constexpr int kPointsPerTrial = 20;

double point_error(const ProductPointd& a, const ProductPointd& b) {
  return std::max(circle_distance(a.t, b.t), (a.y.vec() - b.y.vec()).norm());
}

double loop_error(const LoopSO3d& a, const LoopSO3d& b) { return sup_distance(a, b); }

double map_error(const OrthogonalMap3d& a, const OrthogonalMap3d& b) {
  return (a.matrix() - b.matrix()).cwiseAbs().maxCoeff();
}

double circle_map_error(const CircleMapd& a, const CircleMapd& b) {
  return a.orientation() == b.orientation() ? circle_distance(a.offset(), b.offset()) : 1.0;
}

// Accumulates the worst error of one property.
class Tracker {
 public:
  Tracker(std::string suite, std::string property, double tol)
      : r_{std::move(suite), std::move(property), true, 0.0, tol, {}} {}

  void error(double e) {
    if (!(e <= r_.tolerance)) r_.passed = false;
    r_.worst = std::max(r_.worst, std::isfinite(e) ? e : 1e300);
  }
  void check(bool ok, const std::string& what) {
    if (!ok) {
      r_.passed = false;
      r_.worst += 1.0;
      if (r_.detail.empty()) r_.detail = what;
    }
  }
  PropertyResult done() { return r_; }

 private:
  PropertyResult r_;
};

std::uint64_t salted(std::uint64_t seed, std::string_view suite) {
  std::uint64_t h = 1469598103934665603ull;
  for (char c : suite) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ull;
  return seed ^ h;
}

std::vector<PropertyResult> group_axioms(const SuiteOptions& o) {
  const std::string s = "group-axioms";
  RandomSource rng(salted(o.seed, s));
  Tracker assoc(s, "associativity", o.algebra_tol);
  Tracker ident(s, "identity", o.algebra_tol);
  Tracker inv(s, "inverse", o.algebra_tol);
  Tracker action(s, "composition-is-function-composition", o.algebra_tol);
  Tracker parity(s, "parity-multiplicative", 0.0);
  const RigidDiffeod id = RigidDiffeod::identity();
  for (int k = 0; k < o.trials; ++k) {
    const auto f = rng.rigid_diffeo(o.resolution);
    const auto g = rng.rigid_diffeo(o.resolution);
    const auto h = rng.rigid_diffeo(o.resolution);
    const auto left = compose(compose(f, g), h);
    const auto right = compose(f, compose(g, h));
    const auto fg = compose(f, g);
    const auto f_fi = compose(f, inverse(f));
    const auto fi_f = compose(inverse(f), f);
    parity.check(fg.parity() == f.parity() * g.parity(), "parity of f o g");
    for (int i = 0; i < kPointsPerTrial; ++i) {
      const double x = rng.uniform();
      const auto y = rng.s2_point();
      const ProductPointd p{x, y};
      assoc.error(point_error(apply_to_point(left, x, y), apply_to_point(right, x, y)));
      ident.error(point_error(apply_to_point(compose(f, id), x, y), apply_to_point(f, x, y)));
      ident.error(point_error(apply_to_point(compose(id, f), x, y), apply_to_point(f, x, y)));
      inv.error(point_error(apply_to_point(f_fi, x, y), p));
      inv.error(point_error(apply_to_point(fi_f, x, y), p));
      const auto gp = apply_to_point(g, x, y);
      action.error(point_error(apply_to_point(fg, x, y), apply_to_point(f, gp.t, gp.y)));
    }
  }
  return {assoc.done(), ident.done(), inv.done(), action.done(), parity.done()};
}

std::vector<PropertyResult> trivialization(const SuiteOptions& o) {
  const std::string s = "trivialization";
  RandomSource rng(salted(o.seed, s));
  Tracker fwd(s, "untrivialize-then-trivialize", o.loop_tol);
  Tracker bwd(s, "trivialize-then-untrivialize", o.loop_tol);
  for (int k = 0; k < o.trials; ++k) {
    // Alternate so both orientations of alpha and both parities of beta occur.
    auto alpha = rng.circle_map();
    auto beta = rng.orthogonal_map();
    if (k % 4 == 1) alpha = CircleMapd::reflection(alpha.offset());
    if (k % 4 == 2) beta = OrthogonalMap3d(beta.rotation(), Sign::kMinus);
    const auto fibering = rng.fibering(o.resolution);
    const auto triple = untrivialize(fibering, alpha, beta);
    const auto back = trivialize(triple);
    fwd.error(std::max({loop_error(back.fibering.loop(), fibering.loop()), circle_map_error(back.alpha, alpha),
                        map_error(back.beta, beta)}));

    RigidTripled f{alpha, beta, rng.smooth_loop(o.resolution)};
    const auto t = trivialize(f);
    const auto g = untrivialize(t.fibering, t.alpha, t.beta);
    bwd.error(std::max({loop_error(g.gamma, f.gamma), circle_map_error(g.alpha, f.alpha), map_error(g.beta, f.beta)}));
  }
  return {fwd.done(), bwd.done()};
}

std::vector<PropertyResult> phi_suite(const SuiteOptions& o) {
  const std::string s = "phi";
  RandomSource rng(salted(o.seed, s));
  Tracker round(s, "loop-fibering-loop", o.loop_tol);
  Tracker inj(s, "injective-with-witness", 0.0);
  std::vector<LoopSO3d> loops;
  for (int k = 0; k < o.trials; ++k) {
    auto l = rng.smooth_loop(o.resolution);
    round.error(loop_error(recover_loop(phi(l), o.resolution), l));
    loops.push_back(std::move(l));
  }
  for (std::size_t a = 0; a < loops.size(); ++a) {
    for (std::size_t b = a + 1; b < loops.size(); ++b) {
      if (sup_distance(loops[a], loops[b]) <= 1e-3) continue;
      const auto w = distinguishing_point(phi(loops[a]), phi(loops[b]), o.loop_tol);
      inj.check(w.has_value(), "no differing fiber point for loops " + std::to_string(a) + ", " + std::to_string(b));
    }
  }
  Tracker act(s, "pushforward-is-action", o.loop_tol);
  Tracker cls(s, "pushforward-class-law", 0.0);
  for (int k = 0; k < o.trials; ++k) {
    const auto f1 = rng.rigid_triple(o.resolution);
    const auto f2 = rng.rigid_triple(o.resolution);
    const auto fibering = rng.fibering(o.resolution);
    const auto once = pushforward(unfactorize(f2) * unfactorize(f1), fibering);
    const auto twice = pushforward(f2, pushforward(f1, fibering));
    act.error(loop_error(once.loop(), twice.loop()));
    // Conjugation and reparameterization keep the class; the rigid loops multiply in.
    const auto expected = classify(f2.gamma) * classify(f1.gamma) * classify(fibering.loop());
    cls.check(classify(once.loop()) == expected && classify(twice.loop()) == expected, "class of image");
  }
  return {round.done(), inj.done(), act.done(), cls.done()};
}

std::vector<PropertyResult> aut_characterization(const SuiteOptions& o) {
  const std::string s = "aut-characterization";
  RandomSource rng(salted(o.seed, s));
  Tracker rigid(s, "O(2)xO(3)x{id}-preserves-F_T", 0.0);
  Tracker fixes(s, "pushforward-fixes-F_T", o.algebra_tol);
  Tracker loops(s, "nonconstant-loop-breaks-F_T", 0.0);
  Tracker agree(s, "preserving-iff-factor-loop-constant", 0.0);
  const auto ft = Fiberingd::trivial(o.resolution);
  const auto id_loop = LoopSO3d::constant_identity(o.resolution);
  for (int k = 0; k < o.trials; ++k) {
    RigidTripled f{rng.circle_map(), rng.orthogonal_map(), id_loop};
    rigid.check(is_fiber_preserving(f, o.loop_tol), "(alpha, beta, id) not fiber-preserving");
    fixes.error(loop_error(pushforward(f, ft).loop(), id_loop));

    RigidTripled g{rng.circle_map(), rng.orthogonal_map(), rng.nonconstant_loop(1e-2, o.resolution)};
    loops.check(!is_fiber_preserving(g, o.loop_tol), "nonconstant gamma preserved F_T");

    const RigidTripled& pick = k % 2 == 0 ? f : g;
    const auto diffeo = unfactorize(pick);
    const bool constant = loop_error(factorize(diffeo).gamma, id_loop) <= o.loop_tol;
    agree.check(constant == is_fiber_preserving(diffeo, o.loop_tol), "predicates disagree");
  }
  return {rigid.done(), fixes.done(), loops.done(), agree.done()};
}

std::vector<PropertyResult> classifier_oracle(const SuiteOptions& o) {
  const std::string s = "classifier-oracle";
  RandomSource rng(salted(o.seed, s));
  Tracker agree(s, "classify-matches-crossing-parity", 0.0);
  Tracker turns(s, "classify-matches-construction", 0.0);
  for (int k = 0; k < o.trials; ++k) {
    const int t = rng.uniform_int(0, 2);
    const auto loop = rng.smooth_loop_with_turns(t, o.resolution);
    const auto c = classify(loop);
    agree.check(c == oracles::crossing_parity(loop, 4 * o.resolution), "trial " + std::to_string(k));
    turns.check(c == (t % 2 ? ComponentClass::kNontrivial : ComponentClass::kTrivial), "trial " + std::to_string(k));
  }
  return {agree.done(), turns.done()};
}

std::vector<PropertyResult> james_suite(const SuiteOptions& o) {
  const std::string s = "james";
  RandomSource rng(salted(o.seed, s));
  Tracker rel(s, "basepoint-deletion", 0.0);
  Tracker idem(s, "normalize-idempotent", 0.0);
  Tracker formula(s, "piecewise-formula", o.algebra_tol);
  Tracker parity(s, "length-parity-is-class", 0.0);
  for (int k = 0; k < o.trials; ++k) {
    const int len = rng.uniform_int(1, 5);
    std::vector<S2Pointd> letters;
    for (int i = 0; i < len; ++i) letters.push_back(rng.s2_point());
    std::vector<S2Pointd> raw = letters;
    const int inserts = rng.uniform_int(1, 3);
    for (int i = 0; i < inserts; ++i)
      raw.insert(raw.begin() + rng.uniform_int(0, static_cast<int>(raw.size())), S2Pointd::north());
    const auto word = normalize(std::span<const S2Pointd>(raw));
    bool same = word.size() == letters.size();
    for (std::size_t i = 0; same && i < letters.size(); ++i) same = word.letters()[i].vec() == letters[i].vec();
    rel.check(same, "normalized word differs from the word without basepoints");
    const auto again = normalize(std::span<const S2Pointd>(word.letters()));
    idem.check(again.size() == word.size(), "normalize changed a normalized word");

    const auto loop = james_concat(word, o.resolution);
    const double t = rng.uniform();
    const int kk = static_cast<int>(word.size());
    const int j = std::min(static_cast<int>(std::floor(kk * t)), kk - 1);
    const Rotationd expected(axis_angle_lift(word.letters()[j], kk * t - j));
    formula.error(geodesic_distance(loop(t), expected));
    parity.check(classify(loop) == (kk % 2 ? ComponentClass::kNontrivial : ComponentClass::kTrivial),
                 "length " + std::to_string(kk));
  }
  return {rel.done(), idem.done(), formula.done(), parity.done()};
}

std::vector<PropertyResult> nullhomotopy_suite(const SuiteOptions& o) {
  const std::string s = "nullhomotopy";
  RandomSource rng(salted(o.seed, s));
  Tracker fixed(s, "constant-map-fixed", o.algebra_tol);
  Tracker height(s, "height-average-zero", 1e-3);
  Tracker indep(s, "lift-independent", o.algebra_tol);
  Tracker endpoint(s, "t1-constant", o.algebra_tol);
  Tracker start(s, "t0-identity", o.algebra_tol);

  const CellGrid fine(64, 128);
  const LiftedMap h(fine, [&] {
    std::vector<double> v(fine.size());
    for (int c = 0; c < fine.size(); ++c) v[c] = fine.center(c)[2];
    return v;
  }());
  height.error(std::abs(average(h)));

  const CellGrid grid(32, 64);
  const int trials = std::max(1, o.trials / 10);
  for (int k = 0; k < trials; ++k) {
    const double c = rng.uniform();
    const auto cm = SphereToCircleMap::constant(grid, c);
    const double tc = rng.uniform();
    const auto moved = homotopy_to_constant(cm, tc);
    for (double v : moved.values()) fixed.error(circle_distance(v, c));

    Vec3<double> a(rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2));
    const double b = rng.uniform(-1, 1);
    const auto f = SphereToCircleMap::from_function(
        grid, [&](const S2Pointd& p) { return a.dot(p.vec()) + b * p[0] * p[1]; });
    const int s1 = rng.uniform_int(0, grid.size() - 1);
    const int s2 = rng.uniform_int(0, grid.size() - 1);
    const double t = rng.uniform();
    const auto h1 = homotopy_to_constant(f, t, s1);
    const auto h2 = homotopy_to_constant(f, t, s2);
    for (int cell = 0; cell < grid.size(); ++cell) indep.error(circle_distance(h1.values()[cell], h2.values()[cell]));

    const auto end = homotopy_to_constant(f, 1.0, s1);
    for (double v : end.values()) endpoint.error(circle_distance(v, end.values().front()));
    const auto begin = homotopy_to_constant(f, 0.0, s2);
    for (int cell = 0; cell < grid.size(); ++cell) start.error(circle_distance(begin.values()[cell], f.values()[cell]));
  }
  return {fixed.done(), height.done(), indep.done(), endpoint.done(), start.done()};
}

using SuiteFn = std::function<std::vector<PropertyResult>(const SuiteOptions&)>;

const std::map<std::string, SuiteFn, std::less<>>& registry() {
  static const std::map<std::string, SuiteFn, std::less<>> r{
      {"group-axioms", group_axioms},
      {"trivialization", trivialization},
      {"phi", phi_suite},
      {"aut-characterization", aut_characterization},
      {"classifier-oracle", classifier_oracle},
      {"james", james_suite},
      {"nullhomotopy", nullhomotopy_suite},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"group-axioms",         "trivialization",    "phi",
                                              "aut-characterization", "classifier-oracle", "james",
                                              "nullhomotopy"};
  return names;
}

bool is_suite_name(std::string_view name) { return name == "all" || registry().count(name) > 0; }

std::vector<PropertyResult> run_suite(std::string_view name, const SuiteOptions& options) {
  if (name == "all") {
    std::vector<PropertyResult> all;
    for (const auto& n : suite_names()) {
      auto r = run_suite(n, options);
      all.insert(all.end(), r.begin(), r.end());
    }
    return all;
  }
  const auto it = registry().find(name);
  if (it == registry().end()) throw std::invalid_argument("unknown suite: " + std::string(name));
  return it->second(options);
}

}  // namespace fiberkit
