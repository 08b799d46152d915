#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "eqc/equilibria.hpp"
#include "eqc/perturbation.hpp"
#include "eqc/scenarios.hpp"
#include "eqc/search.hpp"

namespace eqc {

enum class Format { Human, Machine };

/// Machine records are `KEY field=value ...`, one per line. Values never
/// contain spaces except VIOLATION detail, which is double-quoted.

/// "1/2,1/2"
std::string machine_strategy(const MixedStrategy& s);
/// "11/13 factor + 2/13 dont", or just the label for pure strategies.
std::string human_strategy(const MixedStrategy& s, const std::vector<std::string>& labels);

void render_equilibria(std::ostream& out, const BimatrixGame& game, const EquilibriumSet& set, Format f);
void render_maxmin(std::ostream& out, const BimatrixGame& game, Player p, const MaxminResult& r, Format f);
void render_comparison(std::ostream& out, const BimatrixGame& before, const BimatrixGame& after,
                       const ComparisonReport& rep, Format f);
/// Includes the VIOLATIONS record; elapsed time appears in human output only.
void render_property_report(std::ostream& out, const PropertyReport& rep, Format f);
void render_hurt_instances(std::ostream& out, const std::vector<HurtInstance>& hits, std::size_t trials, Format f);

struct ScenarioRun {
  Scenario scenario;
  std::vector<EquilibriumSet> solved;  // parallel to scenario.games
  std::optional<ComparisonReport> comparison;
  std::vector<StudentChoice> choices;  // parallel to signaling->types
  std::optional<SelfConfirmation> confirmation;
  std::vector<std::string> mismatches;  // expectations the recomputation missed
};

/// Solves every game, runs the comparison and the signaling analysis, and
/// checks the pinned expectations.
ScenarioRun run_scenario(std::string_view name, Execution exec = Execution::Parallel);
void render_scenario(std::ostream& out, const ScenarioRun& run, Format f);

}  // namespace eqc
