#include "cli.hpp"

#include "fiberkit/io.hpp"
#include "fiberkit/loop_spec.hpp"
#include "fiberkit/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>

namespace fiberkit::cli {

namespace {

struct Options {
  std::string loop = "trivial";
  std::string points = "fib:8";
  std::string format = "obj";
  std::string out;
  std::string component;
  std::string grid = "32x64";
  std::string suite = "all";
  std::string family_file;
  int resolution = kDefaultResolution;
  int fiber_res = 128;
  std::uint64_t seed = 1;
  int trials = 100;
  double tol = kLoopTol;
  double algebra_tol = kAlgebraTol;
};

std::uint64_t default_seed() {
  if (const char* env = std::getenv("FIBERKIT_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

int cmd_fiber_export(const Options& o, std::ostream& out) {
  const auto loop = parse_loop_spec(o.loop, o.resolution);
  const auto scene = build_scene(phi(loop), parse_point_set(o.points), o.fiber_res);
  std::ostringstream buf;
  if (o.format == "obj")
    write_obj(scene, buf);
  else
    write_scene_json(scene, buf);
  if (o.out.empty() || o.out == "-") {
    out << buf.str();
  } else {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + o.out);
    f << buf.str();
    out << "wrote " << scene.curves.size() << " fibers to " << o.out << "\n";
  }
  return kOk;
}

int cmd_classify(const Options& o, std::ostream& out) {
  const auto loop = parse_loop_spec(o.loop, o.resolution);
  const auto c = classify(loop);
  out << "component: " << to_string(c) << "\n";
  out << "endpoint: " << (c == ComponentClass::kTrivial ? "+1" : "-1") << "\n";
  return kOk;
}

int cmd_family(const Options& o, std::ostream& out) {
  const auto grid = SphereGrid::parse(o.grid);
  const auto target = component_from_string(o.component);
  const auto family = target == ComponentClass::kTrivial ? generator_family_T(grid, o.resolution)
                                                         : generator_family_N(grid, o.resolution);
  write_json_file(to_json(family), o.out);
  out << "wrote " << family.members.size() << " " << to_string(target) << " members to " << o.out << "\n";
  return kOk;
}

int cmd_verify_family(const Options& o, std::ostream& out) {
  const auto family = family_from_json(read_json_file(o.family_file));
  const double dist = max_adjacent_distance(family);
  const double bound = continuity_bound(family.grid);
  const bool ok = dist <= bound;
  out << "PASS family/classes members=" << family.members.size() << " component=" << to_string(family.target) << "\n";
  out << (ok ? "PASS" : "FAIL") << " family/continuity worst=" << dist << " bound=" << bound << "\n";
  return ok ? kOk : kFailed;
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (!o.family_file.empty()) return cmd_verify_family(o, out);
  SuiteOptions so;
  so.seed = o.seed;
  so.trials = o.trials;
  so.resolution = o.resolution;
  so.loop_tol = o.tol;
  so.algebra_tol = o.algebra_tol;
  const auto results = run_suite(o.suite, so);
  int failures = 0;
  out << std::setprecision(3);
  for (const auto& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.suite << "/" << r.property << " worst=" << r.worst
        << " tol=" << r.tolerance;
    if (!r.passed) {
      ++failures;
      if (!r.detail.empty()) out << " (" << r.detail << ")";
      out << " reproduce: fiberkit verify --suite " << r.suite << " --seed " << o.seed << " --trials " << o.trials;
    }
    out << "\n";
  }
  out << results.size() - failures << "/" << results.size() << " properties passed\n";
  return failures == 0 ? kOk : kFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  o.seed = default_seed();

  CLI::App app{"Rigid Seifert fiberings of S^1 x S^2 as based loops in SO(3)", "fiberkit"};
  app.require_subcommand(1);

  auto* exp = app.add_subcommand("fiber-export", "Export fibers of a rigid fibering as OBJ or JSON polylines");
  exp->add_option("--loop", o.loop, "trivial | gluck:p | gluck-concat:p;q | james:x1;...;xk | file.json")
      ->capture_default_str();
  exp->add_option("--y-grid", o.points, "fiber starting points: fib:K | equator:K | LAxLO | pts:x,y,z;...")
      ->capture_default_str();
  exp->add_option("--format", o.format, "obj or json")->check(CLI::IsMember({"obj", "json"}))->capture_default_str();
  exp->add_option("--out", o.out, "output path (default stdout)");
  exp->add_option("--resolution", o.resolution, "loop samples")->check(CLI::Range(8, 1 << 20))->capture_default_str();
  exp->add_option("--fiber-res", o.fiber_res, "samples per fiber")->check(CLI::Range(1, 1 << 20))->capture_default_str();

  auto* cls = app.add_subcommand("classify", "Report the component of a loop");
  cls->add_option("--loop", o.loop, "loop spec")->required();
  cls->add_option("--resolution", o.resolution, "loop samples")->check(CLI::Range(8, 1 << 20))->capture_default_str();

  auto* fam = app.add_subcommand("family", "Write a Gluck generator family as JSON");
  fam->add_option("--component", o.component, "T or N")->required()->check(CLI::IsMember({"T", "N"}));
  fam->add_option("--grid", o.grid, "LAxLO latitude-longitude grid")->capture_default_str();
  fam->add_option("--out", o.out, "output path")->required();
  fam->add_option("--resolution", o.resolution, "loop samples")->check(CLI::Range(8, 1 << 20))->capture_default_str();

  auto* ver = app.add_subcommand("verify", "Run randomized property suites");
  ver->add_option("--suite", o.suite, "suite name or 'all'")->capture_default_str();
  ver->add_option("--seed", o.seed, "random seed (default $FIBERKIT_SEED or 1)");
  ver->add_option("--trials", o.trials, "random trials per property")->check(CLI::Range(1, 1000000))->capture_default_str();
  ver->add_option("--resolution", o.resolution, "loop samples")->check(CLI::Range(8, 1 << 20))->capture_default_str();
  ver->add_option("--tol", o.tol, "loop comparison tolerance (radians)")->capture_default_str();
  ver->add_option("--algebra-tol", o.algebra_tol, "pointwise algebra tolerance")->capture_default_str();
  ver->add_option("--family", o.family_file, "re-load and re-verify a family JSON file instead of a suite");

  try {
    std::vector<std::string> args;
    for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (*exp) return cmd_fiber_export(o, out);
    if (*cls) return cmd_classify(o, out);
    if (*fam) return cmd_family(o, out);
    if (*ver) {
      if (o.family_file.empty() && !is_suite_name(o.suite)) {
        err << "unknown suite '" << o.suite << "'; expected one of:";
        for (const auto& n : suite_names()) err << " " << n;
        err << " all\n";
        return kUsage;
      }
      return cmd_verify(o, out);
    }
  } catch (const InsufficientResolution& e) {
    err << "insufficient resolution: " << e.what() << "\n";
    return kNumerical;
  } catch (const NonLiftable& e) {
    err << "not liftable: " << e.what() << "\n";
    return kNumerical;
  } catch (const ClassificationError& e) {
    err << "classification failed: " << e.what() << "\n";
    return kNumerical;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}

}  // namespace fiberkit::cli
