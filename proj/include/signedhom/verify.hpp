#pragma once

#include <functional>
#include <string>
#include <vector>

#include "signedhom/graph.hpp"

namespace signedhom {
namespace verify {

enum class Tier {
  Fast,     // runs at every level
  Sweep,    // the exact chromatic sweep; skipped by verify-paper --level fast
  Census7,  // the n = 7 census tier; full level only
};

struct ClaimResult {
  bool passed = false;
  std::string detail;             // one-line summary of what was checked
  std::string counterexample_sg;  // first offending graph, when applicable
  double ms = 0.0;
};

struct Claim {
  std::string name;
  int criterion = 0;  // acceptance criterion number
  Tier tier = Tier::Fast;
  std::string summary;
  std::function<ClaimResult()> run;
};

const std::vector<Claim>& paper_claims();

// Criterion runners parameterized for mutation tests.
ClaimResult check_hatw_criticality(const SignedGraph& w);
ClaimResult check_density_witnesses();
ClaimResult check_petersen_critical();
ClaimResult check_petersen_chic();
ClaimResult check_cstar3_girths();
ClaimResult check_coloring_hom_equivalence();
ClaimResult check_census_theorem(int n_max);
ClaimResult check_census_structural(int n_max);
ClaimResult check_extension_replays();
ClaimResult check_discharging();
ClaimResult check_solver_certification();

}  // namespace verify
}  // namespace signedhom
