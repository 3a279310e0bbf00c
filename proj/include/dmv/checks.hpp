#pragma once

// Named verification suites shared by `dmv verify` and the acceptance binary.
// Each suite returns one result per property it checks; a suite passes when
// every result passes.

#include <cstdint>
#include <string>
#include <vector>

namespace dmv {

struct CheckResult {
  std::string name;
  bool pass = false;
  double value = 0;      // the measured error, order or deviation
  double tolerance = 0;  // the threshold value was compared against
  std::string detail;
};

struct CheckOptions {
  std::uint64_t seed = 20260101;
  // Added to delta_1 wherever the Q-polynomials are built; sensitivity probe.
  double delta1_perturbation = 0;
  std::int64_t prime_cutoff = 1000000;  // a_2 Euler product
  std::int64_t q_cutoff = 10000;        // additive-divisor q-series
  std::vector<double> moment_T{1000, 2000, 4000};
  double moment_eta = 0.2;
};

// Property suites, cheap enough for `dmv verify`: cancellation,
// q_form_equivalence, q4_w2_identity, constants, residues, m0_contour,
// limit_lemma, identities.
const std::vector<std::string>& property_suites();
// Experiment suites: additive_divisor, moment.
const std::vector<std::string>& experiment_suites();

// UnsupportedError for an unknown name.  Library errors raised inside a
// suite are reported as failing results, not rethrown.
std::vector<CheckResult> run_suite(const std::string& name, const CheckOptions& options = {});

bool all_pass(const std::vector<CheckResult>& results);

}  // namespace dmv
