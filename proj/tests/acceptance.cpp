// Acceptance gate: one PASS/FAIL line per criterion, zero tolerance.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "eqc/equilibria.hpp"
#include "eqc/io.hpp"
#include "eqc/perturbation.hpp"
#include "eqc/scenarios.hpp"
#include "eqc/search.hpp"
#include "oracles.hpp"

using namespace eqc;

namespace {

constexpr std::size_t kTrials = 500;

struct Check {
  bool ok = true;
  std::ostringstream why;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      if (!ok) why << "; ";
      why << what;
      ok = false;
    }
  }
};

bool pays(const Equilibrium& e, const Rational& a, const Rational& b) { return e.payoff1 == a && e.payoff2 == b; }

MixedStrategy mix(std::vector<Rational> p) { return MixedStrategy(std::move(p)); }

GenSpec suite_spec(std::uint64_t seed) {
  GenSpec s;
  s.rows = 2;
  s.max_rows = 4;
  s.cols = 2;
  s.max_cols = 4;
  s.payoff_lo = -5;
  s.payoff_hi = 5;
  s.seed = seed;
  s.trials = kTrials;
  return s;
}

std::string summary(const PropertyReport& r) {
  return r.property + " " + std::to_string(r.violations.size()) + "/" + std::to_string(r.trials) + " violations, " +
         std::to_string(r.skipped) + " degenerate skipped";
}

void factoring(Check& c) {
  const auto before = enumerate_equilibria(factoring_restricted_game());
  c.expect(before.equilibria.size() == 1 && pays(before.equilibria[0], 3, 1), "before-game is not unique (3,1)");
  const auto after = enumerate_equilibria(chicken_game()).equilibria;
  c.expect(after.size() == 3, "after-game does not have exactly 3 equilibria");
  const auto m = mix({Rational(11, 13), Rational(2, 13)});
  int pure31 = 0, pure13 = 0, mixed11 = 0;
  for (const auto& e : after) {
    const bool pure = e.support1.size() == 1 && e.support2.size() == 1;
    pure31 += pure && pays(e, 3, 1);
    pure13 += pure && pays(e, 1, 3);
    mixed11 += e.s1 == m && e.s2 == m && pays(e, 1, 1);
  }
  c.expect(pure31 == 1 && pure13 == 1 && mixed11 == 1, "after-game is not {(3,1), (1,3), mixed 11/13 at (1,1)}");
  const auto rep = compare_improvement(factoring_restricted_game(), chicken_game(), Player::One, false);
  c.expect(rep.before_worst == 3 && rep.after_worst == 1, "worst payoffs are not 3 -> 1");
  c.expect(rep.verdict == Verdict::Hurt, "verdict is not HURT");
  c.why << (c.ok ? "worst 3 -> 1, HURT" : "");
}

void subsidy(Check& c) {
  const auto before = enumerate_equilibria(subsidy_game()).equilibria;
  const auto after = enumerate_equilibria(subsidized_game()).equilibria;
  c.expect(before.size() == 1 && before[0].s1 == MixedStrategy::pure(2, 1) && before[0].s2 == MixedStrategy::pure(2, 0) &&
               pays(before[0], 3, 1),
           "before is not unique (b1,a2) with (3,1)");
  c.expect(after.size() == 1 && after[0].s1 == MixedStrategy::pure(2, 0) && after[0].s2 == MixedStrategy::pure(2, 1) &&
               pays(after[0], 0, 2),
           "after is not unique (a1,b2) with (0,2)");
  const auto rep = compare_improvement(subsidy_game(), subsidized_game(), Player::One, false);
  c.expect(rep.verdict == Verdict::Hurt, "verdict is not HURT");
  if (before.size() == 1 && after.size() == 1)
    c.expect(before[0].payoff1 + before[0].payoff2 == 4 && after[0].payoff1 + after[0].payoff2 == 2,
             "welfare does not drop 4 -> 2");
  c.why << (c.ok ? "worst 3 -> 0, HURT, welfare 4 -> 2" : "");
}

void costsum(Check& c) {
  const auto costed = costsum_game();
  const auto before_game = realize(costed);
  const auto after_game = realize(costed.with_cost(Player::One, {0, 0}));
  const auto before = enumerate_equilibria(before_game).equilibria;
  const auto half = MixedStrategy::uniform(2);
  c.expect(before.size() == 1 && before[0].s1 == half && before[0].s2 == half && pays(before[0], Rational(5, 2), 1),
           "with costs the unique equilibrium is not (1/2,1/2) paying (5/2,1)");
  const auto after = enumerate_equilibria(after_game).equilibria;
  const bool unique = after.size() == 1 && after[0].s1 == MixedStrategy::pure(2, 0) &&
                      after[0].s2 == MixedStrategy::pure(2, 1) && after[0].payoff1 == 2;
  c.expect(unique, "after zeroing costs the unique equilibrium is not (a1,b2) paying player 1 exactly 2");
  if (unique)
    c.expect(after[0].payoff2 == after_game.payoff(Player::Two, 0, 1), "player 2 payoff disagrees with the matrix");
  const auto rep = compare_improvement(before_game, after_game, Player::One, false);
  c.expect(rep.verdict == Verdict::Hurt, "verdict is not HURT");
  if (c.ok) c.why << "5/2 -> 2, HURT; player 2 after = " << after[0].payoff2;
}

void freeride(Check& c) {
  const auto start = std::chrono::steady_clock::now();
  const auto g = build_question_game(freeride_spec());
  const auto smart = build_question_game(freeride_smart_spec());
  const auto set = enumerate_equilibria(g);
  c.expect(set.equilibria.size() == 1 && set.equilibria[0].s1 == MixedStrategy::pure(11, 10) &&
               set.equilibria[0].s2 == MixedStrategy::pure(11, 0) && pays(set.equilibria[0], 9, 10),
           "original game is not uniquely (10,0) paying (9,10)");
  const auto smart_set = enumerate_equilibria(smart);
  bool pure_0_10 = false, mixed_fixture = false;
  std::vector<Rational> ends(11);
  ends[0] = Rational(1, 10);
  ends[10] = Rational(9, 10);
  for (const auto& e : smart_set.equilibria) {
    pure_0_10 |= e.s1 == MixedStrategy::pure(11, 0) && e.s2 == MixedStrategy::pure(11, 10) && pays(e, 10, 9);
    mixed_fixture |= e.s1 == mix(ends) && e.s2 == mix(ends) && pays(e, 9, 9);
  }
  c.expect(pure_0_10, "smart variant lacks (0,10) paying (10,9)");
  c.expect(mixed_fixture, "smart variant lacks the pinned mixed equilibrium");
  c.expect(smart_set.equilibria.size() == 21, "smart variant extreme-equilibrium count changed from 21");
  const auto rep = compare_improvement(g, smart, Player::Two, true);
  c.expect(rep.before_worst == 10 && rep.after_worst <= 9, "worst payoffs are not 10 -> at most 9");
  c.expect(rep.verdict == Verdict::Hurt, "verdict is not HURT");
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.expect(secs <= 300, "enumeration exceeded 5 minutes");
  if (c.ok) c.why << "unique (10,0); player 2 worst 10 -> " << rep.after_worst << ", HURT (" << secs << "s)";
}

void signaling(Check& c) {
  const auto spec = placement_test_spec();
  std::vector<StudentChoice> choices;
  for (const auto& t : spec.types) choices.push_back(signaling_optimal_choice(spec, t));
  auto is = [](const StudentChoice& ch, std::size_t q, bool hard, const Rational& u) {
    return ch.questions == q && ch.works_hard == hard && ch.utility == u;
  };
  c.expect(is(choices[0], 6, false, 106), "slow is not (6, relax, 106)");
  c.expect(is(choices[1], 6, false, 106), "moderate is not (6, relax, 106)");
  c.expect(is(choices[2], 10, true, Rational(531, 5)), "fast is not (10, hard, 531/5)");
  c.expect(signaling_self_confirming(spec, choices).confirmed, "beliefs are not self-confirming");
  c.expect(signaling_value_of_type_change(spec, spec.types[0], spec.types[1]) == 0, "slow -> moderate is not 0");
  const auto fast = signaling_value_of_type_change(spec, spec.types[0], spec.types[2]);
  c.expect(fast == Rational(1, 5) && fast.sign() > 0, "slow -> fast is not 1/5");
  c.why << (c.ok ? "106, 106, 531/5; confirmed; values 0 and 1/5" : "");
}

void theorem1(Check& c) {
  const auto r = verify_property(Property::Theorem1, suite_spec(61));
  c.expect(r.passed() && r.trials == kTrials, summary(r));
  c.why << (c.ok ? summary(r) : "");
}

void theorem2(Check& c) {
  const auto r = verify_property(Property::Theorem2, suite_spec(71));
  c.expect(r.passed() && r.trials == kTrials, summary(r));
  c.expect(r.skipped < r.trials, "every draw was degenerate");

  const auto before = costsum_game();
  const auto after = before.with_cost(Player::One, {0, 0});
  const auto out =
      check_instance(Property::Theorem2Control, {serialize_game(before), serialize_game(after)}, Player::One);
  c.expect(out.violation && out.violation->find("before=5/2 after=2") != std::string::npos,
           "control check does not flag the costed counterexample");

  GenSpec control = suite_spec(1);
  control.max_rows = control.max_cols = 0;
  control.trials = 2000;
  const auto rc = verify_property(Property::Theorem2Control, control);
  c.expect(!rc.passed(), "random control suite found no HURT instance");
  if (c.ok)
    c.why << summary(r) << "; control: counterexample HURT, random control " << rc.violations.size()
          << " hit(s) first at trial " << rc.violations.front().trial;
}

void h_equivalence(Check& c) {
  const auto r = verify_property(Property::HEquivalence, suite_spec(81));
  c.expect(r.passed() && r.skipped == 0, summary(r));
  c.why << (c.ok ? summary(r) : "");
}

void structural(Check& c) {
  std::ostringstream parts;
  for (auto p : {Property::MinimaxConsistency, Property::Oddness, Property::ShiftInvariance}) {
    const auto r = verify_property(p, suite_spec(91));
    c.expect(r.passed(), summary(r));
    if (p == Property::Oddness) c.expect(r.trials - r.skipped >= 100, "oddness: fewer than 100 nondegenerate draws");
    parts << summary(r) << "; ";
  }

  GenSpec two = suite_spec(97);
  two.max_rows = two.max_cols = 0;
  two.payoff_lo = -3;
  two.payoff_hi = 3;
  std::size_t compared = 0, mismatched = 0;
  for (std::uint64_t t = 0; t < kTrials; ++t) {
    const auto g = gen_general(two, t);
    const auto expected = oracle::solve_2x2(g);
    if (!expected) continue;  // payoff ties: the closed form does not apply
    ++compared;
    std::vector<oracle::Point2> got;
    for (const auto& e : enumerate_equilibria(g, Execution::Serial).equilibria) got.push_back({e.s1[0], e.s2[0]});
    std::sort(got.begin(), got.end());
    mismatched += got != *expected;
  }
  c.expect(mismatched == 0, "2x2 oracle: " + std::to_string(mismatched) + " mismatches");
  c.expect(compared > 0, "2x2 oracle: nothing compared");
  if (c.ok) c.why << parts.str() << "2x2 oracle 0/" << compared << " mismatches";
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Check&)>>> criteria{
      {"factoring scenario", factoring},
      {"subsidy scenario", subsidy},
      {"costsum scenario", costsum},
      {"free-riding scenario", freeride},
      {"signaling scenario", signaling},
      {"constant-sum improvement suite", theorem1},
      {"one-sided cost suite", theorem2},
      {"H-equivalence suite", h_equivalence},
      {"structural suites", structural},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    failed += !c.ok;
    std::cout << (c.ok ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << ": " << c.why.str()
              << std::endl;
  }
  std::cout << (failed ? "ACCEPTANCE FAILED" : "ACCEPTANCE PASSED") << " (" << criteria.size() - failed << "/"
            << criteria.size() << ")" << std::endl;
  return failed ? 1 : 0;
}
