#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "eqc/execution.hpp"
#include "eqc/game.hpp"
#include "eqc/perturbation.hpp"

namespace eqc {

/// Random instance generation parameters. Dimensions are drawn per trial
/// from [rows, max_rows] x [cols, max_cols]; max_* of 0 means "fixed".
struct GenSpec {
  std::size_t rows = 2;
  std::size_t cols = 2;
  std::size_t max_rows = 0;
  std::size_t max_cols = 0;
  long payoff_lo = -5;
  long payoff_hi = 5;
  Rational constant = 0;
  std::uint64_t seed = 1;
  std::size_t trials = 100;
};

/// Throws std::invalid_argument when the spec is unusable.
void validate(const GenSpec& spec);

/// Stream purposes; each (seed, trial, purpose) triple is an independent stream.
enum class Stream : std::uint32_t { Game = 1, Improvement = 2, Costs = 3, Shift = 4 };

/// std::mt19937_64 seeded through std::seed_seq from (seed, trial, purpose).
/// Both algorithms are fully specified by the standard, so draws are
/// identical on every platform. Range reduction is done here, not by a
/// standard distribution, for the same reason.
class TrialRng {
 public:
  TrialRng(std::uint64_t seed, std::uint64_t trial, Stream purpose);
  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi);

 private:
  std::mt19937_64 engine_;
};

BimatrixGame gen_constant_sum(const GenSpec& spec, std::uint64_t trial);
/// Independent integer payoffs for both players.
BimatrixGame gen_general(const GenSpec& spec, std::uint64_t trial);
/// Nonnegative increments on the focal player's payoffs, arbitrary integer
/// perturbations on the opponent's.
BimatrixGame gen_improvement(const BimatrixGame& game, Player player, const GenSpec& spec, std::uint64_t trial);
/// Constant-sum base with nonnegative random cost1; cost2 is a single
/// repeated value when opponent_cost_constant is set.
CostedGame gen_costed(const GenSpec& spec, std::uint64_t trial, bool opponent_cost_constant);

enum class Property {
  Theorem1,
  Theorem2,
  Theorem2Control,  // both cost vectors random: violations are expected
  HEquivalence,
  ShiftInvariance,
  MinimaxConsistency,
  Oddness,
};

std::string to_string(Property p);
/// Throws std::invalid_argument for unknown names.
Property property_from_string(std::string_view name);
const std::vector<std::string>& property_names();

struct Violation {
  std::uint64_t trial = 0;
  Player player = Player::One;
  std::vector<std::string> games;  // game-file text, replayable by the CLI
  std::string detail;              // the offending equilibrium or quantity
};

struct PropertyReport {
  std::string property;
  std::size_t trials = 0;
  std::size_t skipped = 0;  // degenerate draws excluded from verdict-based checks
  std::vector<Violation> violations;
  double elapsed_seconds = 0;
  bool passed() const { return violations.empty(); }
};

struct CheckOutcome {
  bool skipped = false;
  std::optional<std::string> violation;
};

/// Checks one instance given as game-file texts (the stored form of a
/// violation). Games per property: theorem1 and shift_invariance take
/// (before, after); theorem2 and its control take (costed before, costed
/// after); h_equivalence takes one costed game; minimax_consistency and
/// oddness take one game.
CheckOutcome check_instance(Property p, const std::vector<std::string>& games, Player player);

/// The game texts and focal player of one generated trial.
struct TrialInstance {
  std::vector<std::string> games;
  Player player = Player::One;
};
TrialInstance generate_instance(Property p, const GenSpec& spec, std::uint64_t trial);

PropertyReport verify_property(Property p, const GenSpec& spec, Execution exec = Execution::Parallel);

struct HurtInstance {
  std::uint64_t trial = 0;
  BimatrixGame before;
  BimatrixGame after;
  ComparisonReport report;
};

/// Random games and improvements whose verdict is HURT, by trial id.
std::vector<HurtInstance> search_hurt(const GenSpec& spec, Player player, bool constant_sum_only = false,
                                      Execution exec = Execution::Parallel);

}  // namespace eqc
