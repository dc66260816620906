#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "adhm/localcurve.hpp"
#include "adhm/wallcross.hpp"

namespace adhm {

// Outcome of one named family of exact checks.
struct SuiteResult {
  std::string name;
  std::size_t checks = 0;
  std::vector<std::string> failures;
  bool pass() const { return failures.empty(); }
};

struct SuiteReport {
  std::vector<SuiteResult> results;
  bool pass() const;
};

// Jacobi, antisymmetry, star associativity, exp/log round trips, the genus-0
// commutator families and the two-generator BCH relation.
struct AlgebraSuiteOptions {
  std::uint64_t seed = 1;
  int jacobi_trials = 500;
  int associativity_trials = 300;
  int exp_log_trials = 200;
};
SuiteReport run_algebra_suite(const AlgebraSuiteOptions& opts);

// One random plus-side table together with a target type (alpha, 2) and one
// of its walls. Tables hold random rationals on 1 <= r <= 4, 0 <= e <= 6.
struct WallInstance {
  InvariantTable plus;
  RankDegree alpha;
  StabilityParam delta_c;
};

// At least `count` instances: random targets with 2 <= r <= 4, 0 <= e <= 6,
// each contributing every wall of its nonnegative-degree wall set. The
// genus cycles through 0, 1, 2.
std::vector<WallInstance> random_wall_instances(std::uint64_t seed, int count);

struct InstanceOutcome {
  Rational js;
  Rational ks;
  bool group_identity = false;
  // Charges whose unit perturbation in the minus table was not detected.
  std::vector<Charge> undetected_perturbations;
};

struct InstanceChecks {
  bool group_identity = false;
  bool perturbations = false;
  TruncationBounds bounds{5, 8};
};

// Evaluates all instances, in parallel over instances.
std::vector<InstanceOutcome> evaluate_instances(const std::vector<WallInstance>& instances,
                                                const InstanceChecks& checks);

SuiteReport run_ks_vs_js_suite(std::uint64_t seed, int trials);
SuiteReport run_group_identity_suite(std::uint64_t seed, int trials, bool perturbations = true);
SuiteReport run_closed_form_suite(const LocalCurveConfig& cfg);

std::string describe(const WallInstance& inst);

namespace reference {
std::vector<InstanceOutcome> evaluate_instances_serial(const std::vector<WallInstance>& instances,
                                                       const InstanceChecks& checks);
}  // namespace reference

}  // namespace adhm
