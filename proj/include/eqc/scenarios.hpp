#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eqc/game.hpp"
#include "eqc/perturbation.hpp"

namespace eqc {

/// Two students, n sequential questions; both score the larger count solved.
struct QuestionGameSpec {
  std::size_t n_questions = 0;
  std::vector<Rational> marginal_costs1;  // cost of the k-th question solved
  std::vector<Rational> marginal_costs2;
};

/// (n+1)x(n+1) game over questions solved 0..n with
/// u_i(x1, x2) = max(x1, x2) - sum of the first x_i marginal costs of i.
BimatrixGame build_question_game(const QuestionGameSpec& spec, std::string name = "questions");

struct StudentType {
  std::string label;
  Rational hard_work_cost;
  std::vector<Rational> marginal_test_costs;  // one per test question
};

struct SignalingSpec {
  std::size_t test_size = 10;
  std::size_t honors_threshold = 7;
  Rational pass_utility = 100;
  Rational skip_utility_per_question = 1;
  Rational school_honors_pass = 1;
  Rational school_honors_fail = -1;
  Rational school_regular = 0;
  std::vector<StudentType> types;
};

struct StudentChoice {
  std::size_t questions = 0;
  bool works_hard = false;
  Rational utility;
  bool placed_honors = false;
};

/// Student utility of answering `questions` and then relaxing or working hard.
Rational student_utility(const SignalingSpec& spec, const StudentType& type, std::size_t questions,
                         bool works_hard);

/// Brute-force argmax; ties go to fewer questions, then to relaxing.
StudentChoice signaling_optimal_choice(const SignalingSpec& spec, const StudentType& type);

/// A choice with the given (questions, effort) and its evaluated utility.
StudentChoice signaling_forced_choice(const SignalingSpec& spec, const StudentType& type, std::size_t questions,
                                      bool works_hard);

struct SelfConfirmation {
  bool confirmed = true;  // nobody placed in honors fails
  std::vector<Rational> school_utilities;
};

SelfConfirmation signaling_self_confirming(const SignalingSpec& spec, const std::vector<StudentChoice>& choices);

Rational signaling_value_of_type_change(const SignalingSpec& spec, const StudentType& from, const StudentType& to);

/// A before/after pair compared for one player.
struct ScenarioComparison {
  BimatrixGame before;
  BimatrixGame after;
  Player player = Player::One;
  bool allow_degenerate = false;
};

/// Values the analyzer must reproduce for a scenario.
struct ScenarioExpectation {
  std::optional<Rational> before_worst;
  std::optional<Rational> after_worst;
  std::optional<Verdict> verdict;
};

struct Scenario {
  std::string name;
  std::string summary;
  std::vector<BimatrixGame> games;  // solved and printed in order
  std::optional<ScenarioComparison> comparison;
  std::optional<CostedGame> costed_before;
  std::optional<CostedGame> costed_after;
  std::optional<QuestionGameSpec> questions;
  std::optional<SignalingSpec> signaling;
  ScenarioExpectation expected;
};

const std::vector<std::string>& builtin_scenario_names();

/// Throws std::invalid_argument for unknown names.
Scenario builtin_scenario(std::string_view name);

// Building blocks shared by the scenarios and the tests.
BimatrixGame chicken_game();
BimatrixGame factoring_restricted_game();
BimatrixGame subsidy_game();
BimatrixGame subsidized_game();
CostedGame costsum_game();
QuestionGameSpec freeride_spec();
QuestionGameSpec freeride_smart_spec();
SignalingSpec placement_test_spec();

}  // namespace eqc
