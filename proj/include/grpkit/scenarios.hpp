#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace grpkit {

struct ScenarioOptions {
  std::uint64_t node_budget = 1000000000ull;
  unsigned jobs = 1;
};

struct ScenarioResult {
  std::string name;
  bool passed = false;
  // Computed values in the order they were produced, e.g. {"index 7 classes", "4"}.
  std::vector<std::pair<std::string, std::string>> evidence;
  // Assertions that did not hold; empty iff passed.
  std::vector<std::string> failures;
};

// Subgroups of index <= 12 in Gamma: class counts, invariants, b1 <= 1.
ScenarioResult scenario_lemma_7_2(ScenarioOptions const& options = {});
// Index-5 subgroups of the b1 >= 1 classes of index <= 12.
ScenarioResult scenario_prop_7_3(ScenarioOptions const& options = {});
// Invariants and index-7/8 counts separating the index-2 extensions of Gamma.
ScenarioResult scenario_theorem_8_2(ScenarioOptions const& options = {});
// Index-8 counts of Lambda0 and Gamma0 x Z/2.
ScenarioResult scenario_theorem_8_3(ScenarioOptions const& options = {});
// Index-24 and index-8 subgroups of the Weeks group.
ScenarioResult scenario_weeks_index24(ScenarioOptions const& options = {});
// Monodromy powers, Alexander polynomial and torus-bundle torsion.
ScenarioResult scenario_fibered_covers(ScenarioOptions const& options = {});

std::vector<std::string> const& scenario_names();
// Throws InvalidArgument for an unknown name.
ScenarioResult run_scenario(std::string_view name, ScenarioOptions const& options = {});

std::string render_scenario(ScenarioResult const& r);

}  // namespace grpkit
