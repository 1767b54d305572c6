#pragma once

// Seeded randomized property suites, driven by `fiberkit verify`.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fiberkit {

struct SuiteOptions {
  std::uint64_t seed = 1;
  int trials = 100;
  int resolution = 256;
  double algebra_tol = 1e-9;
  double loop_tol = 1e-6;
};

struct PropertyResult {
  std::string suite;
  std::string property;
  bool passed = false;
  /// Largest observed error (or count of failures for boolean properties).
  double worst = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

/// group-axioms, trivialization, phi, aut-characterization,
/// classifier-oracle, james, nullhomotopy.
const std::vector<std::string>& suite_names();

bool is_suite_name(std::string_view name);

/// Runs one suite, or every suite for "all". Throws std::invalid_argument for
/// unknown names.
std::vector<PropertyResult> run_suite(std::string_view name, const SuiteOptions& options);

}  // namespace fiberkit
