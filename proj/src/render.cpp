#include "eqc/render.hpp"

#include <algorithm>
#include <array>
#include <iomanip>
#include <sstream>

namespace eqc {

namespace {

std::string join_indices(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

std::string join_rationals(const std::vector<Rational>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].str();
  return out;
}

const char* bool_str(bool b) { return b ? "true" : "false"; }

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c == '\n' ? ' ' : c;
  }
  return out + "\"";
}

std::string relation_str(const ImprovementRelation& rel) {
  switch (rel.kind) {
    case ImprovementKind::ImprovedSomewhere: return "improved";
    case ImprovementKind::Unchanged: return "unchanged";
    case ImprovementKind::NotImproved: return "not_improved";
  }
  return "?";
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

}  // namespace

std::string machine_strategy(const MixedStrategy& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + s[i].str();
  return out;
}

std::string human_strategy(const MixedStrategy& s, const std::vector<std::string>& labels) {
  const auto support = s.support();
  if (support.size() == 1) return labels[support[0]];
  std::string out;
  for (std::size_t k = 0; k < support.size(); ++k)
    out += (k ? " + " : "") + s[support[k]].str() + " " + labels[support[k]];
  return out;
}

void render_equilibria(std::ostream& out, const BimatrixGame& game, const EquilibriumSet& set, Format f) {
  if (f == Format::Machine) {
    out << "GAME name=" << game.name() << " rows=" << game.rows() << " cols=" << game.cols()
        << " degenerate=" << bool_str(set.game_degenerate) << "\n";
    for (std::size_t i = 0; i < set.equilibria.size(); ++i) {
      const auto& e = set.equilibria[i];
      out << "EQUILIBRIUM index=" << i << " s1=" << machine_strategy(e.s1) << " s2=" << machine_strategy(e.s2)
          << " payoff1=" << e.payoff1 << " payoff2=" << e.payoff2 << " support1=" << join_indices(e.support1)
          << " support2=" << join_indices(e.support2) << " degenerate=" << bool_str(e.degenerate) << "\n";
    }
    out << "COUNT equilibria=" << set.equilibria.size() << "\n";
    return;
  }
  out << game.name() << " (" << game.rows() << "x" << game.cols() << "): " << set.equilibria.size()
      << (set.equilibria.size() == 1 ? " equilibrium" : " equilibria");
  if (set.game_degenerate) out << ", degenerate game (extreme equilibria listed)";
  out << "\n";
  std::vector<std::array<std::string, 4>> rows;
  std::array<std::size_t, 3> width{8, 8, 7};
  for (std::size_t i = 0; i < set.equilibria.size(); ++i) {
    const auto& e = set.equilibria[i];
    std::array<std::string, 4> r{human_strategy(e.s1, game.row_actions()), human_strategy(e.s2, game.col_actions()),
                                 "(" + e.payoff1.str() + ", " + e.payoff2.str() + ")", std::to_string(i)};
    for (std::size_t k = 0; k < 3; ++k) width[k] = std::max(width[k], r[k].size());
    rows.push_back(std::move(r));
  }
  out << "  #  " << pad("player 1", width[0]) << "  " << pad("player 2", width[1]) << "  payoffs\n";
  for (const auto& r : rows)
    out << "  " << pad(r[3], 2) << " " << pad(r[0], width[0]) << "  " << pad(r[1], width[1]) << "  " << r[2] << "\n";
}

void render_maxmin(std::ostream& out, const BimatrixGame& game, Player p, const MaxminResult& r, Format f) {
  if (f == Format::Machine) {
    out << "MAXMIN player=" << index_of(p) << " value=" << r.value << " strategy=" << machine_strategy(r.strategy)
        << "\n";
    return;
  }
  out << game.name() << ": player " << index_of(p) << " guarantees " << r.value << " by playing "
      << human_strategy(r.strategy, game.actions(p)) << "\n";
}

void render_comparison(std::ostream& out, const BimatrixGame& before, const BimatrixGame& after,
                       const ComparisonReport& rep, Format f) {
  const auto& rel = rep.relation;
  if (f == Format::Machine) {
    out << "RELATION player=" << index_of(rep.player) << " kind=" << relation_str(rel)
        << " availability=" << bool_str(rel.availability);
    if (rel.witness) out << " witness=" << rel.witness->row << "," << rel.witness->col;
    out << "\n";
    out << "DEGENERACY before=" << bool_str(rep.before_equilibria.game_degenerate)
        << " after=" << bool_str(rep.after_equilibria.game_degenerate) << "\n";
    out << "WORST before=" << rep.before_worst << " after=" << rep.after_worst << "\n";
    out << "BEST before=" << rep.before_best << " after=" << rep.after_best << "\n";
    out << "VERDICT " << to_string(rep.verdict) << "\n";
    return;
  }
  out << "player " << index_of(rep.player) << ": " << before.name() << " -> " << after.name() << "\n";
  out << "  relation: " << to_string(rel.kind);
  if (rel.availability) out << " (new actions available)";
  if (rel.witness)
    out << " at (" << after.row_actions()[rel.witness->row] << ", " << after.col_actions()[rel.witness->col] << ")";
  out << "\n";
  out << "  worst equilibrium payoff: " << rep.before_worst << " -> " << rep.after_worst << "\n";
  out << "  best equilibrium payoff:  " << rep.before_best << " -> " << rep.after_best << "\n";
  if (rep.degeneracy_note) out << "  note: " << *rep.degeneracy_note << "\n";
  out << "  verdict: " << to_string(rep.verdict) << "\n";
}

void render_property_report(std::ostream& out, const PropertyReport& rep, Format f) {
  if (f == Format::Machine) {
    out << "PROPERTY name=" << rep.property << " trials=" << rep.trials << " skipped=" << rep.skipped << "\n";
    for (const auto& v : rep.violations)
      out << "VIOLATION trial=" << v.trial << " player=" << index_of(v.player) << " detail=" << quoted(v.detail)
          << "\n";
    out << "VIOLATIONS " << rep.violations.size() << "\n";
    return;
  }
  out << rep.property << ": " << rep.trials << " trials, " << rep.skipped << " skipped as degenerate, "
      << rep.violations.size() << " violations (" << std::fixed << std::setprecision(2) << rep.elapsed_seconds
      << "s)\n";
  out.unsetf(std::ios::floatfield);
  for (const auto& v : rep.violations)
    out << "  trial " << v.trial << ", player " << index_of(v.player) << ": " << v.detail << "\n";
  out << (rep.passed() ? "PASS" : "FAIL") << "\n";
}

void render_hurt_instances(std::ostream& out, const std::vector<HurtInstance>& hits, std::size_t trials, Format f) {
  if (f == Format::Machine) {
    for (const auto& h : hits)
      out << "HIT trial=" << h.trial << " player=" << index_of(h.report.player) << " before=" << h.report.before_worst
          << " after=" << h.report.after_worst << "\n";
    out << "HITS " << hits.size() << " trials=" << trials << "\n";
    return;
  }
  out << hits.size() << " HURT instance(s) in " << trials << " trials\n";
  for (const auto& h : hits)
    out << "  trial " << h.trial << ": worst " << h.report.before_worst << " -> " << h.report.after_worst << "\n";
}

ScenarioRun run_scenario(std::string_view name, Execution exec) {
  ScenarioRun run{builtin_scenario(name), {}, {}, {}, {}, {}};
  const Scenario& s = run.scenario;
  if (s.comparison) {
    const auto& c = *s.comparison;
    run.comparison = compare_improvement(c.before, c.after, c.player, c.allow_degenerate, exec);
  }
  for (const auto& g : s.games) {
    if (run.comparison && g == s.comparison->before)
      run.solved.push_back(run.comparison->before_equilibria);
    else if (run.comparison && g == s.comparison->after)
      run.solved.push_back(run.comparison->after_equilibria);
    else
      run.solved.push_back(enumerate_equilibria(g, exec));
  }
  if (s.signaling) {
    for (const auto& t : s.signaling->types) run.choices.push_back(signaling_optimal_choice(*s.signaling, t));
    run.confirmation = signaling_self_confirming(*s.signaling, run.choices);
  }

  auto expect = [&](const std::optional<Rational>& want, const Rational& got, const char* what) {
    if (want && *want != got) run.mismatches.push_back(std::string(what) + " expected " + want->str() + " got " + got.str());
  };
  if (run.comparison) {
    expect(s.expected.before_worst, run.comparison->before_worst, "before_worst");
    expect(s.expected.after_worst, run.comparison->after_worst, "after_worst");
    if (s.expected.verdict && *s.expected.verdict != run.comparison->verdict)
      run.mismatches.push_back("verdict expected " + to_string(*s.expected.verdict) + " got " +
                               to_string(run.comparison->verdict));
  }
  return run;
}

void render_scenario(std::ostream& out, const ScenarioRun& run, Format f) {
  const Scenario& s = run.scenario;
  if (f == Format::Machine)
    out << "SCENARIO name=" << s.name << "\n";
  else
    out << "scenario " << s.name << ": " << s.summary << "\n\n";

  if (s.costed_before && f == Format::Human)
    out << "costs before: (" << join_rationals(s.costed_before->cost1()) << ") / ("
        << join_rationals(s.costed_before->cost2()) << ")\n\n";
  for (std::size_t i = 0; i < s.games.size(); ++i) {
    render_equilibria(out, s.games[i], run.solved[i], f);
    if (f == Format::Human) out << "\n";
  }
  if (run.comparison) {
    render_comparison(out, s.comparison->before, s.comparison->after, *run.comparison, f);
    if (f == Format::Human) out << "\n";
  }
  if (s.signaling) {
    const auto& spec = *s.signaling;
    for (std::size_t i = 0; i < spec.types.size(); ++i) {
      const auto& c = run.choices[i];
      if (f == Format::Machine)
        out << "CHOICE type=" << spec.types[i].label << " questions=" << c.questions
            << " effort=" << (c.works_hard ? "hard" : "relax") << " utility=" << c.utility
            << " honors=" << bool_str(c.placed_honors) << "\n";
      else
        out << pad(spec.types[i].label, 9) << " answers " << c.questions << ", "
            << (c.works_hard ? "works hard" : "relaxes") << (c.placed_honors ? " in honors" : " in regular")
            << ", utility " << c.utility << "\n";
    }
    if (f == Format::Machine)
      out << "SELF_CONFIRMING confirmed=" << bool_str(run.confirmation->confirmed)
          << " school=" << join_rationals(run.confirmation->school_utilities) << "\n";
    else
      out << "school beliefs self-confirming: " << (run.confirmation->confirmed ? "yes" : "no") << "\n";
    for (std::size_t i = 1; i < spec.types.size(); ++i) {
      const Rational v = signaling_value_of_type_change(spec, spec.types[0], spec.types[i]);
      if (f == Format::Machine)
        out << "VALUE from=" << spec.types[0].label << " to=" << spec.types[i].label << " value=" << v << "\n";
      else
        out << "value of " << spec.types[0].label << " -> " << spec.types[i].label << ": " << v << "\n";
    }
    if (f == Format::Human) out << "\n";
  }
  if (f == Format::Machine) {
    for (const auto& m : run.mismatches) out << "MISMATCH detail=" << quoted(m) << "\n";
    out << "VIOLATIONS " << run.mismatches.size() << "\n";
  } else {
    for (const auto& m : run.mismatches) out << "mismatch: " << m << "\n";
    out << (run.mismatches.empty() ? "matches the expected values" : "DOES NOT match the expected values") << "\n";
  }
}

}  // namespace eqc
