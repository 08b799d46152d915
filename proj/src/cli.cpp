#include "eqc/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "eqc/io.hpp"
#include "eqc/render.hpp"

namespace eqc {

namespace {

struct Common {
  std::string format = "human";
  bool serial = false;

  Format fmt() const { return format == "machine" ? Format::Machine : Format::Human; }
  Execution exec() const { return serial ? Execution::Serial : Execution::Parallel; }
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"human", "machine"}));
  cmd->add_flag("--serial", c.serial, "Run kernels on one thread");
}

void add_player(CLI::App* cmd, int& player, bool required = true) {
  auto* opt = cmd->add_option("--player", player, "Focal player")->check(CLI::IsMember({1, 2}));
  if (required) opt->required();
}

std::size_t default_trials() {
  if (const char* env = std::getenv("EQCOMPARE_TRIALS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return 100;
}

void add_gen_options(CLI::App* cmd, GenSpec& spec, std::string& constant) {
  cmd->add_option("--trials", spec.trials, "Number of trials")->capture_default_str();
  cmd->add_option("--seed", spec.seed, "Master seed")->capture_default_str();
  cmd->add_option("--rows", spec.rows, "Row count (minimum when --max-rows is set)")->capture_default_str();
  cmd->add_option("--cols", spec.cols, "Column count (minimum when --max-cols is set)")->capture_default_str();
  cmd->add_option("--max-rows", spec.max_rows, "Largest row count");
  cmd->add_option("--max-cols", spec.max_cols, "Largest column count");
  cmd->add_option("--lo", spec.payoff_lo, "Smallest payoff")->capture_default_str();
  cmd->add_option("--hi", spec.payoff_hi, "Largest payoff")->capture_default_str();
  cmd->add_option("--constant", constant, "Payoff sum of constant-sum draws")->capture_default_str();
}

std::string slug(std::string s) {
  for (char& c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '-' && c != '_') c = '_';
  return s;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << text;
}

void emit_violations(const std::filesystem::path& dir, const PropertyReport& rep) {
  std::filesystem::create_directories(dir);
  for (const auto& v : rep.violations) {
    for (std::size_t k = 0; k < v.games.size(); ++k) {
      const std::string header = "# " + rep.property + " trial " + std::to_string(v.trial) + " player " +
                                 std::to_string(index_of(v.player)) + " game " + std::to_string(k) + "\n# " +
                                 v.detail + "\n";
      write_file(dir / (rep.property + "-t" + std::to_string(v.trial) + "-" + std::to_string(k) + ".game"),
                 header + v.games[k]);
    }
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact equilibrium analysis of bimatrix games and their improvements", "eqcompare"};
  app.require_subcommand(1);
  Common common;
  int player = 1;
  GenSpec spec;
  spec.trials = default_trials();
  std::string constant = "0";
  std::string file, before_file, after_file, property, scenario, emit_dir;
  std::vector<std::string> files;
  bool allow_degenerate = false, constant_sum_only = false;

  auto* solve = app.add_subcommand("solve", "List all equilibria of a game file");
  solve->add_option("FILE", file)->required();
  add_common(solve, common);

  auto* mm = app.add_subcommand("maxmin", "Maxmin strategy and value of one player");
  mm->add_option("FILE", file)->required();
  add_player(mm, player);
  add_common(mm, common);

  auto* ht = app.add_subcommand("htransform", "Print the constant-sum H game of a costed game file");
  ht->add_option("FILE", file)->required();
  add_common(ht, common);

  auto* cmp = app.add_subcommand("compare", "Compare worst equilibrium payoffs before and after a change");
  cmp->add_option("BEFORE", before_file)->required();
  cmp->add_option("AFTER", after_file)->required();
  add_player(cmp, player);
  cmp->add_flag("--allow-degenerate", allow_degenerate, "Give a verdict from extreme equilibria on degenerate games");
  add_common(cmp, common);

  auto* ver = app.add_subcommand("verify", "Check a property on random instances");
  ver->add_option("PROPERTY", property)->required()->check(CLI::IsMember(property_names()));
  add_gen_options(ver, spec, constant);
  ver->add_option("--emit", emit_dir, "Write violating instances as game files into this directory");
  add_common(ver, common);

  auto* rep = app.add_subcommand("replay", "Re-check a property on stored game files");
  rep->add_option("PROPERTY", property)->required()->check(CLI::IsMember(property_names()));
  rep->add_option("FILES", files)->required();
  add_player(rep, player, false);
  add_common(rep, common);

  auto* srch = app.add_subcommand("search", "Search random games for improvements that hurt");
  add_gen_options(srch, spec, constant);
  add_player(srch, player);
  srch->add_flag("--constant-sum", constant_sum_only, "Draw constant-sum games only");
  srch->add_option("--emit", emit_dir, "Write each hit as a before/after pair of game files");
  add_common(srch, common);

  auto* scn = app.add_subcommand("scenario", "Reproduce a built-in example");
  scn->add_option("NAME", scenario)->required()->check(CLI::IsMember(builtin_scenario_names()));
  scn->add_option("--export", emit_dir, "Write the scenario's games as game files into this directory");
  add_common(scn, common);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  const Format fmt = common.fmt();
  const Execution exec = common.exec();
  const Player focal = player_from_int(player);
  try {
    if (*solve) {
      const auto game = load_game_file(file).game();
      render_equilibria(out, game, enumerate_equilibria(game, exec), fmt);
      return kExitOk;
    }
    if (*mm) {
      const auto game = load_game_file(file).game();
      render_maxmin(out, game, focal, maxmin(game, focal), fmt);
      return kExitOk;
    }
    if (*ht) {
      const auto costed = load_game_file(file).costed();
      const auto h = h_transform(costed).renamed(costed.base().name() + "-h");
      if (fmt == Format::Human)
        out << "# constant-sum with constant " << costed.constant() << "; same equilibria as "
            << costed.base().name() << " with costs\n";
      out << serialize_game(h);
      return kExitOk;
    }
    if (*cmp) {
      const auto before = load_game_file(before_file).game();
      const auto after = load_game_file(after_file).game();
      const auto report = compare_improvement(before, after, focal, allow_degenerate, exec);
      render_comparison(out, before, after, report, fmt);
      return report.verdict == Verdict::Indeterminate ? kExitIndeterminate : kExitOk;
    }
    if (*ver) {
      spec.constant = Rational::parse(constant);
      const auto report = verify_property(property_from_string(property), spec, exec);
      render_property_report(out, report, fmt);
      if (!emit_dir.empty()) emit_violations(emit_dir, report);
      return report.passed() ? kExitOk : kExitViolation;
    }
    if (*rep) {
      std::vector<std::string> texts;
      for (const auto& f : files) {
        std::ifstream in(f);
        if (!in) throw std::runtime_error("cannot read " + f);
        texts.emplace_back(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
        parse_game_file(texts.back());  // surface parse errors with positions before checking
      }
      const auto outcome = check_instance(property_from_string(property), texts, focal);
      if (fmt == Format::Machine) {
        out << "CHECK property=" << property << " skipped=" << (outcome.skipped ? "true" : "false") << "\n";
        if (outcome.violation) out << "VIOLATION detail=\"" << *outcome.violation << "\"\n";
        out << "VIOLATIONS " << (outcome.violation ? 1 : 0) << "\n";
      } else {
        out << property << ": "
            << (outcome.violation ? "violated: " + *outcome.violation
                                  : outcome.skipped ? std::string("skipped (degenerate)") : std::string("holds"))
            << "\n";
      }
      return outcome.violation ? kExitViolation : kExitOk;
    }
    if (*srch) {
      spec.constant = Rational::parse(constant);
      const auto hits = search_hurt(spec, focal, constant_sum_only, exec);
      render_hurt_instances(out, hits, spec.trials, fmt);
      if (!emit_dir.empty()) {
        std::filesystem::create_directories(emit_dir);
        for (const auto& h : hits) {
          const std::string stem = "hurt-s" + std::to_string(spec.seed) + "-t" + std::to_string(h.trial);
          write_file(std::filesystem::path(emit_dir) / (stem + "-before.game"), serialize_game(h.before));
          write_file(std::filesystem::path(emit_dir) / (stem + "-after.game"), serialize_game(h.after));
        }
      }
      return kExitOk;
    }
    if (*scn) {
      const auto run = run_scenario(scenario, exec);
      render_scenario(out, run, fmt);
      if (!emit_dir.empty()) {
        std::filesystem::create_directories(emit_dir);
        for (const auto& g : run.scenario.games)
          write_file(std::filesystem::path(emit_dir) / (slug(g.name()) + ".game"), serialize_game(g));
        if (run.scenario.costed_before)
          write_file(std::filesystem::path(emit_dir) / (scenario + "-costed-before.game"),
                     serialize_game(*run.scenario.costed_before));
        if (run.scenario.costed_after)
          write_file(std::filesystem::path(emit_dir) / (scenario + "-costed-after.game"),
                     serialize_game(*run.scenario.costed_after));
      }
      if (run.comparison && run.comparison->verdict == Verdict::Indeterminate) return kExitIndeterminate;
      return run.mismatches.empty() ? kExitOk : kExitViolation;
    }
  } catch (const std::exception& e) {
    err << "eqcompare: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace eqc
