#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ivpoly::selfcheck {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

/// Instance counts for each criterion. The defaults are the full acceptance
/// thresholds; quick() is the subset `ivpoly selftest` runs.
struct AcceptanceConfig {
  std::uint64_t seed = 20240601;
  int agreement_instances = 500;
  int image_pairs = 200;
  int lift_pairs_per_case = 100;
  int phi_round_trips = 200;
  int integrality_matrices = 500;
  int closure_pairs = 100;
  int monotonicity_trials = 300;
  int irreducible_lifts = 200;

  static AcceptanceConfig quick();
};

std::vector<CriterionResult> run_acceptance(const AcceptanceConfig& config);

}  // namespace ivpoly::selfcheck
