#include "eqc/scenarios.hpp"

#include <algorithm>
#include <stdexcept>

namespace eqc {

BimatrixGame build_question_game(const QuestionGameSpec& spec, std::string name) {
  const std::size_t n = spec.n_questions;
  if (n == 0 || spec.marginal_costs1.size() != n || spec.marginal_costs2.size() != n)
    throw std::invalid_argument("question game needs n >= 1 and one marginal cost per question");
  for (const auto* costs : {&spec.marginal_costs1, &spec.marginal_costs2})
    for (const auto& c : *costs)
      if (c.sign() < 0) throw std::invalid_argument("negative marginal cost " + c.str());

  std::vector<std::string> labels;
  std::vector<Rational> total1(n + 1), total2(n + 1);  // cumulative cost of solving x questions
  for (std::size_t x = 0; x <= n; ++x) {
    labels.push_back(std::to_string(x));
    if (x > 0) {
      total1[x] = total1[x - 1] + spec.marginal_costs1[x - 1];
      total2[x] = total2[x - 1] + spec.marginal_costs2[x - 1];
    }
  }
  Matrix u1(n + 1, n + 1), u2(n + 1, n + 1);
  for (std::size_t x1 = 0; x1 <= n; ++x1) {
    for (std::size_t x2 = 0; x2 <= n; ++x2) {
      const Rational credit(static_cast<long>(std::max(x1, x2)));
      u1(x1, x2) = credit - total1[x1];
      u2(x1, x2) = credit - total2[x2];
    }
  }
  return BimatrixGame(std::move(name), labels, labels, std::move(u1), std::move(u2));
}

Rational student_utility(const SignalingSpec& spec, const StudentType& type, std::size_t questions,
                         bool works_hard) {
  if (questions > spec.test_size || type.marginal_test_costs.size() != spec.test_size)
    throw std::invalid_argument("question count or test cost vector does not match the test size");
  Rational u = spec.skip_utility_per_question * Rational(static_cast<long>(questions));
  for (std::size_t k = 0; k < questions; ++k) u -= type.marginal_test_costs[k];
  const bool honors = questions >= spec.honors_threshold;
  if (works_hard)
    u += spec.pass_utility - type.hard_work_cost;
  else if (!honors)
    u += spec.pass_utility;  // relaxing passes the regular class only
  return u;
}

StudentChoice signaling_forced_choice(const SignalingSpec& spec, const StudentType& type, std::size_t questions,
                                      bool works_hard) {
  return StudentChoice{questions, works_hard, student_utility(spec, type, questions, works_hard),
                       questions >= spec.honors_threshold};
}

StudentChoice signaling_optimal_choice(const SignalingSpec& spec, const StudentType& type) {
  std::optional<StudentChoice> best;
  for (std::size_t q = 0; q <= spec.test_size; ++q) {
    for (bool hard : {false, true}) {
      StudentChoice c = signaling_forced_choice(spec, type, q, hard);
      if (!best || c.utility > best->utility) best = c;
    }
  }
  return *best;
}

SelfConfirmation signaling_self_confirming(const SignalingSpec& spec, const std::vector<StudentChoice>& choices) {
  SelfConfirmation out;
  for (const auto& c : choices) {
    if (!c.placed_honors) {
      out.school_utilities.push_back(spec.school_regular);
    } else if (c.works_hard) {
      out.school_utilities.push_back(spec.school_honors_pass);
    } else {
      out.school_utilities.push_back(spec.school_honors_fail);
      out.confirmed = false;
    }
  }
  return out;
}

Rational signaling_value_of_type_change(const SignalingSpec& spec, const StudentType& from, const StudentType& to) {
  return signaling_optimal_choice(spec, to).utility - signaling_optimal_choice(spec, from).utility;
}

namespace {

std::vector<Rational> costs(std::initializer_list<std::pair<std::size_t, Rational>> runs) {
  std::vector<Rational> out;
  for (const auto& [count, value] : runs) out.insert(out.end(), count, value);
  return out;
}

Matrix mat(std::initializer_list<std::initializer_list<Rational>> rows) {
  std::vector<std::vector<Rational>> v;
  for (auto r : rows) v.emplace_back(r);
  return Matrix::from_rows(v);
}

}  // namespace

BimatrixGame chicken_game() {
  return BimatrixGame("chicken", {"factor", "dont"}, {"factor", "dont"}, mat({{1, 1}, {3, -10}}),
                      mat({{1, 3}, {1, -10}}));
}

BimatrixGame factoring_restricted_game() {
  // Factoring is impossible for player 1: the row is absent, not priced at infinity.
  const std::size_t rows[] = {1};
  const std::size_t cols[] = {0, 1};
  return chicken_game().restricted(rows, cols).renamed("factoring-classical");
}

BimatrixGame subsidy_game() {
  return BimatrixGame("subsidy-before", {"a1", "b1"}, {"a2", "b2"}, mat({{2, -2}, {3, -1}}), mat({{1, 2}, {1, -1}}));
}

BimatrixGame subsidized_game() {
  return BimatrixGame("subsidy-after", {"a1", "b1"}, {"a2", "b2"}, mat({{4, 0}, {3, -1}}), mat({{1, 2}, {1, -1}}));
}

CostedGame costsum_game() {
  // Costs are subtracted. The listed signs are the ones that reproduce the
  // mixed (1/2, 1/2) equilibrium with payoffs (5/2, 1).
  BimatrixGame base("costsum", {"a1", "b1"}, {"a2", "b2"}, mat({{6, 2}, {4, 1}}), mat({{0, 4}, {2, 5}}));
  return CostedGame(std::move(base), {Rational(3, 2), 0}, {0, Rational(7, 2)});
}

QuestionGameSpec freeride_spec() {
  return QuestionGameSpec{10, costs({{10, Rational(1, 10)}}), costs({{7, Rational(1, 10)}, {3, Rational(11, 10)}})};
}

QuestionGameSpec freeride_smart_spec() {
  return QuestionGameSpec{10, costs({{10, Rational(1, 10)}}), costs({{10, Rational(1, 10)}})};
}

SignalingSpec placement_test_spec() {
  SignalingSpec spec;
  spec.types = {
      StudentType{"slow", 100, costs({{6, 0}, {4, Rational(11, 10)}})},
      StudentType{"moderate", 7, costs({{6, 0}, {4, Rational(1, 2)}})},
      StudentType{"fast", 3, costs({{6, 0}, {4, Rational(1, 5)}})},
  };
  return spec;
}

const std::vector<std::string>& builtin_scenario_names() {
  static const std::vector<std::string> names{"factoring", "subsidy", "costsum", "freeride", "freeride_smart",
                                              "signaling"};
  return names;
}

Scenario builtin_scenario(std::string_view name) {
  Scenario s;
  s.name = std::string(name);
  if (name == "factoring") {
    s.summary = "player 1 gains the ability to factor; the chicken game replaces the one-row game";
    s.games = {factoring_restricted_game(), chicken_game()};
    s.comparison = ScenarioComparison{s.games[0], s.games[1], Player::One, false};
    s.expected = {Rational(3), Rational(1), Verdict::Hurt};
  } else if (name == "subsidy") {
    s.summary = "player 1 is subsidized by 2 for playing a1, which becomes dominant";
    s.games = {subsidy_game(), subsidized_game()};
    s.comparison = ScenarioComparison{s.games[0], s.games[1], Player::One, false};
    s.expected = {Rational(3), Rational(0), Verdict::Hurt};
  } else if (name == "costsum") {
    s.summary = "constant-sum base with costs on both sides; player 1's costs drop to zero";
    s.costed_before = costsum_game();
    s.costed_after = s.costed_before->with_cost(Player::One, {0, 0});
    s.games = {realize(*s.costed_before).renamed("costsum-before"),
               realize(*s.costed_after).renamed("costsum-after"),
               h_transform(*s.costed_before).renamed("costsum-h")};
    s.comparison = ScenarioComparison{s.games[0], s.games[1], Player::One, false};
    s.expected = {Rational(5, 2), Rational(2), Verdict::Hurt};
  } else if (name == "freeride") {
    s.summary = "student 2 becomes as fast as student 1 and loses the free ride";
    s.questions = freeride_spec();
    s.games = {build_question_game(freeride_spec(), "freeride"),
               build_question_game(freeride_smart_spec(), "freeride-smart")};
    // both question games are degenerate; extreme equilibria bound every component
    s.comparison = ScenarioComparison{s.games[0], s.games[1], Player::Two, true};
    s.expected = {Rational(10), Rational(9), Verdict::Hurt};
  } else if (name == "freeride_smart") {
    s.summary = "both students solve questions at cost 1/10";
    s.questions = freeride_smart_spec();
    s.games = {build_question_game(freeride_smart_spec(), "freeride-smart")};
  } else if (name == "signaling") {
    s.summary = "placement test: slow and moderate students answer six questions, fast students all ten";
    s.signaling = placement_test_spec();
  } else {
    throw std::invalid_argument("unknown scenario '" + std::string(name) + "'");
  }
  return s;
}

}  // namespace eqc
