#include "eqc/search.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <sstream>

#include "eqc/detail/parallel.hpp"
#include "eqc/io.hpp"

namespace eqc {

void validate(const GenSpec& spec) {
  if (spec.rows == 0 || spec.cols == 0) throw std::invalid_argument("rows and cols must be positive");
  if (spec.max_rows != 0 && spec.max_rows < spec.rows) throw std::invalid_argument("max_rows below rows");
  if (spec.max_cols != 0 && spec.max_cols < spec.cols) throw std::invalid_argument("max_cols below cols");
  if (std::max(spec.rows, spec.max_rows) > 64 || std::max(spec.cols, spec.max_cols) > 64)
    throw std::invalid_argument("games are limited to 64 actions per player");
  if (spec.payoff_lo > spec.payoff_hi) throw std::invalid_argument("empty payoff range");
  if (spec.trials == 0) throw std::invalid_argument("trials must be positive");
}

TrialRng::TrialRng(std::uint64_t seed, std::uint64_t trial, Stream purpose) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32),
                    static_cast<std::uint32_t>(purpose)};
  engine_.seed(seq);
}

long TrialRng::uniform(long lo, long hi) {
  const std::uint64_t range = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (range == 0) return static_cast<long>(engine_());
  const std::uint64_t threshold = (0 - range) % range;  // 2^64 mod range
  std::uint64_t x;
  do {
    x = engine_();
  } while (x < threshold);
  return lo + static_cast<long>(x % range);
}

namespace {

std::vector<std::string> labels(char prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

std::string trial_name(const char* kind, const GenSpec& spec, std::uint64_t trial) {
  return std::string(kind) + "-s" + std::to_string(spec.seed) + "-t" + std::to_string(trial);
}

std::pair<std::size_t, std::size_t> draw_dims(const GenSpec& spec, TrialRng& rng) {
  const auto r = static_cast<std::size_t>(
      rng.uniform(static_cast<long>(spec.rows), static_cast<long>(std::max(spec.rows, spec.max_rows))));
  const auto c = static_cast<std::size_t>(
      rng.uniform(static_cast<long>(spec.cols), static_cast<long>(std::max(spec.cols, spec.max_cols))));
  return {r, c};
}

long nonneg_hi(const GenSpec& spec) { return std::max(spec.payoff_hi, 0L); }

BimatrixGame parse_normal(const std::string& text) { return parse_game_file(text).game(); }
CostedGame parse_costed(const std::string& text) { return parse_game_file(text).costed(); }

std::string format_strategy(const MixedStrategy& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + s[i].str();
  return out + ")";
}

std::string format_equilibrium(const Equilibrium& e) {
  return "s1=" + format_strategy(e.s1) + " s2=" + format_strategy(e.s2) + " payoffs=(" + e.payoff1.str() + "," +
         e.payoff2.str() + ")";
}

bool same_profiles(const EquilibriumSet& a, const EquilibriumSet& b, std::string& diff) {
  const std::size_t n = std::min(a.equilibria.size(), b.equilibria.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (!a.equilibria[i].same_profile(b.equilibria[i])) {
      diff = format_equilibrium(a.equilibria[i]) + " vs " + format_equilibrium(b.equilibria[i]);
      return false;
    }
  }
  if (a.equilibria.size() != b.equilibria.size()) {
    const auto& longer = a.equilibria.size() > n ? a.equilibria[n] : b.equilibria[n];
    diff = "equilibrium counts " + std::to_string(a.equilibria.size()) + " vs " +
           std::to_string(b.equilibria.size()) + "; unmatched " + format_equilibrium(longer);
    return false;
  }
  if (a.game_degenerate != b.game_degenerate) {
    diff = "degeneracy flags differ";
    return false;
  }
  return true;
}

void expect_games(const std::vector<std::string>& games, std::size_t n) {
  if (games.size() != n)
    throw std::invalid_argument("expected " + std::to_string(n) + " game(s), got " + std::to_string(games.size()));
}

CheckOutcome violated(std::string detail) { return CheckOutcome{false, std::move(detail)}; }

CheckOutcome check_theorem1(const std::vector<std::string>& games, Player p) {
  expect_games(games, 2);
  const BimatrixGame before = parse_normal(games[0]);
  const BimatrixGame after = parse_normal(games[1]);
  if (!is_constant_sum(before)) return violated("before-game is not constant-sum");
  auto rel = improvement_relation(before, after, p);
  if (rel.kind == ImprovementKind::NotImproved) return violated("after-game is not a pointwise improvement");
  const Rational floor = maxmin(before, p).value;
  for (const auto& e : enumerate_equilibria(after, Execution::Serial).equilibria)
    if (e.payoff(p) < floor)
      return violated(format_equilibrium(e) + " pays player " + std::to_string(index_of(p)) + " below maxmin " +
                      floor.str());
  return {};
}

CheckOutcome check_theorem2(const std::vector<std::string>& games, Player p, bool require_constant) {
  expect_games(games, 2);
  const CostedGame before = parse_costed(games[0]);
  const CostedGame after = parse_costed(games[1]);
  if (!(before.base() == after.base()) || before.cost(other(p)) != after.cost(other(p)))
    return violated("games differ beyond the focal player's cost");
  const auto& opp = before.cost(other(p));
  if (require_constant && std::adjacent_find(opp.begin(), opp.end(), std::not_equal_to<>()) != opp.end())
    return violated("opponent cost is not constant");
  for (std::size_t a = 0; a < before.cost(p).size(); ++a)
    if (after.cost(p)[a] > before.cost(p)[a]) return violated("cost increased at action " + std::to_string(a));
  auto rep = compare_improvement(realize(before), realize(after), p, false, Execution::Serial);
  if (rep.verdict == Verdict::Indeterminate) return CheckOutcome{true, std::nullopt};
  if (rep.verdict == Verdict::Hurt) {
    const auto& eqs = rep.after_equilibria.equilibria;
    auto worst = std::min_element(eqs.begin(), eqs.end(),
                                  [&](const auto& a, const auto& b) { return a.payoff(p) < b.payoff(p); });
    return violated("worst before=" + rep.before_worst.str() + " after=" + rep.after_worst.str() + " at " +
                    format_equilibrium(*worst));
  }
  return {};
}

CheckOutcome check_h_equivalence(const std::vector<std::string>& games) {
  expect_games(games, 1);
  const CostedGame costed = parse_costed(games[0]);
  const BimatrixGame h = h_transform(costed);
  auto k = is_constant_sum(h);
  if (!k || *k != costed.constant())
    return violated("H is not constant-sum with constant " + costed.constant().str());
  std::string diff;
  if (!same_profiles(enumerate_equilibria(realize(costed), Execution::Serial),
                     enumerate_equilibria(h, Execution::Serial), diff))
    return violated(diff);
  return {};
}

CheckOutcome check_shift(const std::vector<std::string>& games, Player p) {
  expect_games(games, 2);
  const BimatrixGame before = parse_normal(games[0]);
  const BimatrixGame after = parse_normal(games[1]);
  const Rational delta = after.payoff(p, 0, 0) - before.payoff(p, 0, 0);
  const auto shifted = shift_player_payoffs(before, p, delta);
  if (delta.sign() < 0 || !(shifted.payoffs(Player::One) == after.payoffs(Player::One)) ||
      !(shifted.payoffs(Player::Two) == after.payoffs(Player::Two)))
    return violated("after-game is not a nonnegative uniform shift");
  auto rep = compare_improvement(before, after, p, true, Execution::Serial);
  if (rep.after_worst != rep.before_worst + delta)
    return violated("worst payoff moved from " + rep.before_worst.str() + " to " + rep.after_worst.str() +
                    " under shift " + delta.str());
  std::string diff;
  if (!same_profiles(rep.before_equilibria, rep.after_equilibria, diff)) return violated(diff);
  return {};
}

CheckOutcome check_minimax(const std::vector<std::string>& games) {
  expect_games(games, 1);
  const BimatrixGame g = parse_normal(games[0]);
  auto k = is_constant_sum(g);
  if (!k) return violated("game is not constant-sum");
  const Rational v1 = maxmin(g, Player::One).value;
  const Rational v2 = maxmin(g, Player::Two).value;
  if (v1 + v2 != *k) return violated("maxmin values " + v1.str() + " + " + v2.str() + " != " + k->str());
  for (const auto& e : enumerate_equilibria(g, Execution::Serial).equilibria)
    if (e.payoff1 != v1 || e.payoff2 != v2)
      return violated(format_equilibrium(e) + " differs from maxmin values (" + v1.str() + "," + v2.str() + ")");
  return {};
}

CheckOutcome check_oddness(const std::vector<std::string>& games) {
  expect_games(games, 1);
  const auto set = enumerate_equilibria(parse_normal(games[0]), Execution::Serial);
  if (set.game_degenerate) return CheckOutcome{true, std::nullopt};
  if (set.equilibria.size() % 2 == 0)
    return violated("nondegenerate game with " + std::to_string(set.equilibria.size()) + " equilibria");
  return {};
}

}  // namespace

BimatrixGame gen_constant_sum(const GenSpec& spec, std::uint64_t trial) {
  TrialRng rng(spec.seed, trial, Stream::Game);
  auto [m, n] = draw_dims(spec, rng);
  Matrix u1(m, n), u2(m, n);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      u1(r, c) = rng.uniform(spec.payoff_lo, spec.payoff_hi);
      u2(r, c) = spec.constant - u1(r, c);
    }
  return BimatrixGame(trial_name("cs", spec, trial), labels('r', m), labels('c', n), std::move(u1), std::move(u2));
}

BimatrixGame gen_general(const GenSpec& spec, std::uint64_t trial) {
  TrialRng rng(spec.seed, trial, Stream::Game);
  auto [m, n] = draw_dims(spec, rng);
  Matrix u1(m, n), u2(m, n);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      u1(r, c) = rng.uniform(spec.payoff_lo, spec.payoff_hi);
      u2(r, c) = rng.uniform(spec.payoff_lo, spec.payoff_hi);
    }
  return BimatrixGame(trial_name("g", spec, trial), labels('r', m), labels('c', n), std::move(u1), std::move(u2));
}

BimatrixGame gen_improvement(const BimatrixGame& game, Player player, const GenSpec& spec, std::uint64_t trial) {
  TrialRng rng(spec.seed, trial, Stream::Improvement);
  Matrix own = game.payoffs(player);
  Matrix opp = game.payoffs(other(player));
  const long lo = std::max(spec.payoff_lo, 0L);
  for (std::size_t r = 0; r < game.rows(); ++r)
    for (std::size_t c = 0; c < game.cols(); ++c) {
      own(r, c) += rng.uniform(lo, nonneg_hi(spec));
      opp(r, c) += rng.uniform(spec.payoff_lo, spec.payoff_hi);
    }
  std::string name = game.name() + "-improved";
  return player == Player::One
             ? BimatrixGame(name, game.row_actions(), game.col_actions(), std::move(own), std::move(opp))
             : BimatrixGame(name, game.row_actions(), game.col_actions(), std::move(opp), std::move(own));
}

CostedGame gen_costed(const GenSpec& spec, std::uint64_t trial, bool opponent_cost_constant) {
  BimatrixGame base = gen_constant_sum(spec, trial);
  TrialRng rng(spec.seed, trial, Stream::Costs);
  std::vector<Rational> c1, c2;
  for (std::size_t r = 0; r < base.rows(); ++r) c1.emplace_back(rng.uniform(0, nonneg_hi(spec)));
  const Rational fixed = rng.uniform(0, nonneg_hi(spec));
  for (std::size_t c = 0; c < base.cols(); ++c)
    c2.push_back(opponent_cost_constant ? fixed : Rational(rng.uniform(0, nonneg_hi(spec))));
  return CostedGame(std::move(base), std::move(c1), std::move(c2));
}

std::string to_string(Property p) {
  switch (p) {
    case Property::Theorem1: return "theorem1";
    case Property::Theorem2: return "theorem2";
    case Property::Theorem2Control: return "theorem2_control";
    case Property::HEquivalence: return "h_equivalence";
    case Property::ShiftInvariance: return "shift_invariance";
    case Property::MinimaxConsistency: return "minimax_consistency";
    case Property::Oddness: return "oddness";
  }
  return "?";
}

const std::vector<std::string>& property_names() {
  static const std::vector<std::string> names{"theorem1",         "theorem2",          "theorem2_control",
                                              "h_equivalence",    "shift_invariance",  "minimax_consistency",
                                              "oddness"};
  return names;
}

Property property_from_string(std::string_view name) {
  for (auto p : {Property::Theorem1, Property::Theorem2, Property::Theorem2Control, Property::HEquivalence,
                 Property::ShiftInvariance, Property::MinimaxConsistency, Property::Oddness})
    if (to_string(p) == name) return p;
  throw std::invalid_argument("unknown property '" + std::string(name) + "'");
}

TrialInstance generate_instance(Property p, const GenSpec& spec, std::uint64_t trial) {
  const Player alternating = trial % 2 ? Player::Two : Player::One;
  switch (p) {
    case Property::Theorem1: {
      auto g = gen_constant_sum(spec, trial);
      return {{serialize_game(g), serialize_game(gen_improvement(g, alternating, spec, trial))}, alternating};
    }
    case Property::Theorem2:
    case Property::Theorem2Control: {
      auto costed = gen_costed(spec, trial, p == Property::Theorem2);
      TrialRng rng(spec.seed, trial, Stream::Improvement);
      std::vector<Rational> lowered = costed.cost1();
      for (auto& c : lowered) c -= rng.uniform(0, nonneg_hi(spec));
      return {{serialize_game(costed), serialize_game(costed.with_cost(Player::One, lowered))}, Player::One};
    }
    case Property::HEquivalence:
      return {{serialize_game(gen_costed(spec, trial, false))}, Player::One};
    case Property::ShiftInvariance: {
      auto g = gen_general(spec, trial);
      TrialRng rng(spec.seed, trial, Stream::Shift);
      auto shifted = shift_player_payoffs(g, alternating, rng.uniform(0, nonneg_hi(spec)));
      return {{serialize_game(g), serialize_game(shifted.renamed(g.name() + "-shifted"))}, alternating};
    }
    case Property::MinimaxConsistency:
      return {{serialize_game(gen_constant_sum(spec, trial))}, Player::One};
    case Property::Oddness:
      return {{serialize_game(gen_general(spec, trial))}, Player::One};
  }
  throw std::logic_error("unhandled property");
}

CheckOutcome check_instance(Property p, const std::vector<std::string>& games, Player player) {
  switch (p) {
    case Property::Theorem1: return check_theorem1(games, player);
    case Property::Theorem2: return check_theorem2(games, player, true);
    case Property::Theorem2Control: return check_theorem2(games, player, false);
    case Property::HEquivalence: return check_h_equivalence(games);
    case Property::ShiftInvariance: return check_shift(games, player);
    case Property::MinimaxConsistency: return check_minimax(games);
    case Property::Oddness: return check_oddness(games);
  }
  throw std::logic_error("unhandled property");
}

PropertyReport verify_property(Property p, const GenSpec& spec, Execution exec) {
  validate(spec);
  const auto start = std::chrono::steady_clock::now();
  struct TrialResult {
    bool skipped = false;
    std::optional<Violation> violation;
  };
  auto results = detail::collect_indexed<TrialResult>(spec.trials, exec, [&](std::size_t t) {
    TrialResult r;
    TrialInstance inst;
    try {
      inst = generate_instance(p, spec, t);
      CheckOutcome out = check_instance(p, inst.games, inst.player);
      r.skipped = out.skipped;
      if (out.violation) r.violation = Violation{t, inst.player, inst.games, *out.violation};
    } catch (const std::exception& e) {
      r.violation = Violation{t, inst.player, inst.games, std::string("exception: ") + e.what()};
    }
    return std::optional<TrialResult>(std::move(r));
  });
  PropertyReport rep;
  rep.property = to_string(p);
  rep.trials = spec.trials;
  for (auto& [t, r] : results) {
    rep.skipped += r.skipped;
    if (r.violation) rep.violations.push_back(std::move(*r.violation));
  }
  rep.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

std::vector<HurtInstance> search_hurt(const GenSpec& spec, Player player, bool constant_sum_only, Execution exec) {
  validate(spec);
  auto found = detail::collect_indexed<HurtInstance>(spec.trials, exec, [&](std::size_t t) -> std::optional<HurtInstance> {
    try {
      BimatrixGame before = constant_sum_only ? gen_constant_sum(spec, t) : gen_general(spec, t);
      BimatrixGame after = gen_improvement(before, player, spec, t);
      auto rep = compare_improvement(before, after, player, false, Execution::Serial);
      if (rep.verdict != Verdict::Hurt) return std::nullopt;
      return HurtInstance{t, std::move(before), std::move(after), std::move(rep)};
    } catch (const std::exception&) {
      return std::nullopt;
    }
  });
  std::vector<HurtInstance> out;
  for (auto& [t, h] : found) out.push_back(std::move(h));
  return out;
}

}  // namespace eqc
