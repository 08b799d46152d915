#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eqc/equilibria.hpp"
#include "eqc/game.hpp"

namespace eqc {

class NotConstantSum : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Constant-sum base game with own-action costs subtracted from each
/// player's payoff: u_i(a) = base_i(a) - cost_i(a_i). Negative entries act
/// as subsidies.
class CostedGame {
 public:
  /// Throws NotConstantSum if `base` is not constant-sum and DimensionError
  /// if the cost vectors do not match the action counts.
  CostedGame(BimatrixGame base, std::vector<Rational> cost1, std::vector<Rational> cost2);

  const BimatrixGame& base() const { return base_; }
  const std::vector<Rational>& cost1() const { return cost1_; }
  const std::vector<Rational>& cost2() const { return cost2_; }
  const std::vector<Rational>& cost(Player p) const { return p == Player::One ? cost1_ : cost2_; }
  const Rational& constant() const { return constant_; }

  CostedGame with_cost(Player p, std::vector<Rational> cost) const;

  friend bool operator==(const CostedGame&, const CostedGame&) = default;

 private:
  BimatrixGame base_;
  std::vector<Rational> cost1_;
  std::vector<Rational> cost2_;
  Rational constant_;
};

/// The playable game: base payoffs minus each player's own-action cost.
BimatrixGame realize(const CostedGame& costed);

/// Realized payoffs plus the opponent's cost at the opponent's action. The
/// result is constant-sum with the base's constant and has exactly the same
/// equilibria as realize(costed).
BimatrixGame h_transform(const CostedGame& costed);

struct PayoffBounds {
  Rational worst;
  Rational best;
};

/// Throws std::logic_error on an empty set: a finite game always has an
/// equilibrium, so an empty set means the enumerator is broken.
PayoffBounds worst_best_payoffs(const EquilibriumSet& set, Player player);

enum class Verdict { Hurt, NotHurt, Unchanged, Indeterminate };

std::string to_string(Verdict v);

struct ComparisonReport {
  Player player = Player::One;
  ImprovementRelation relation;
  Rational before_worst;
  Rational before_best;
  Rational after_worst;
  Rational after_best;
  Verdict verdict = Verdict::Indeterminate;
  std::optional<std::string> degeneracy_note;
  EquilibriumSet before_equilibria;
  EquilibriumSet after_equilibria;
};

/// Relation between `before` and `after` for `player`, allowing the
/// after-game to offer actions the before-game omits (an availability
/// improvement). Witness coordinates refer to the after-game. Throws
/// DimensionError when the before-game's labels are not a subset.
ImprovementRelation availability_relation(const BimatrixGame& before, const BimatrixGame& after,
                                          Player player);

/// Compares the focal player's worst equilibrium payoff before and after.
/// Degenerate games yield Indeterminate unless allow_degenerate is set, in
/// which case worst/best are taken over the extreme equilibria.
ComparisonReport compare_improvement(const BimatrixGame& before, const BimatrixGame& after, Player player,
                                     bool allow_degenerate, Execution exec = Execution::Parallel);

/// after_worst - before_worst. Throws std::invalid_argument on degenerate inputs.
Rational value_of_improvement(const BimatrixGame& before, const BimatrixGame& after, Player player);

}  // namespace eqc
