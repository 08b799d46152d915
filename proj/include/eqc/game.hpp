#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "eqc/rational.hpp"

namespace eqc {

enum class Player { One = 1, Two = 2 };

inline Player other(Player p) { return p == Player::One ? Player::Two : Player::One; }
inline int index_of(Player p) { return static_cast<int>(p); }

/// Player from its 1-based number; throws std::invalid_argument otherwise.
Player player_from_int(int n);

/// Raised when strategies, matrices or action spaces do not line up.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense row-major matrix of exact payoffs.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const Rational& fill = Rational(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  /// Throws DimensionError when the rows are ragged.
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  Matrix transposed() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// A probability distribution over one player's actions.
class MixedStrategy {
 public:
  /// Throws std::invalid_argument unless entries are nonnegative and sum to 1.
  explicit MixedStrategy(std::vector<Rational> probabilities);
  static MixedStrategy pure(std::size_t actions, std::size_t chosen);
  static MixedStrategy uniform(std::size_t actions);

  std::size_t size() const { return p_.size(); }
  const Rational& operator[](std::size_t i) const { return p_[i]; }
  const std::vector<Rational>& probabilities() const { return p_; }
  std::vector<std::size_t> support() const;

  friend bool operator==(const MixedStrategy&, const MixedStrategy&) = default;
  friend auto operator<=>(const MixedStrategy& a, const MixedStrategy& b) { return a.p_ <=> b.p_; }

 private:
  std::vector<Rational> p_;
};

struct ActionProfile {
  std::size_t row = 0;
  std::size_t col = 0;
  friend bool operator==(const ActionProfile&, const ActionProfile&) = default;
};

/// Two-player normal-form game. Immutable once built; transforms return new games.
class BimatrixGame {
 public:
  BimatrixGame(std::string name, std::vector<std::string> row_actions,
               std::vector<std::string> col_actions, Matrix u1, Matrix u2);

  const std::string& name() const { return name_; }
  const std::vector<std::string>& row_actions() const { return row_actions_; }
  const std::vector<std::string>& col_actions() const { return col_actions_; }
  const std::vector<std::string>& actions(Player p) const {
    return p == Player::One ? row_actions_ : col_actions_;
  }
  std::size_t rows() const { return row_actions_.size(); }
  std::size_t cols() const { return col_actions_.size(); }
  std::size_t action_count(Player p) const { return actions(p).size(); }

  const Matrix& payoffs(Player p) const { return p == Player::One ? u1_ : u2_; }
  const Matrix& u1() const { return u1_; }
  const Matrix& u2() const { return u2_; }
  /// Payoff to `p` at pure profile (row, col).
  const Rational& payoff(Player p, std::size_t row, std::size_t col) const {
    return payoffs(p)(row, col);
  }

  BimatrixGame renamed(std::string name) const;
  /// Keeps the listed rows/cols (in the given order).
  BimatrixGame restricted(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;

  friend bool operator==(const BimatrixGame&, const BimatrixGame&) = default;

 private:
  std::string name_;
  std::vector<std::string> row_actions_;
  std::vector<std::string> col_actions_;
  Matrix u1_;
  Matrix u2_;
};

enum class ImprovementKind { ImprovedSomewhere, Unchanged, NotImproved };

struct ImprovementRelation {
  ImprovementKind kind = ImprovementKind::Unchanged;
  std::optional<ActionProfile> witness;
  /// Set when the after-game offers actions the before-game lacked.
  bool availability = false;
};

std::string to_string(ImprovementKind kind);

Rational expected_payoff(const BimatrixGame& game, const MixedStrategy& s1, const MixedStrategy& s2,
                         Player player);

struct BestResponses {
  std::vector<std::size_t> actions;
  Rational value;
};

/// Pure actions of `player` maximizing expected payoff against `opponent`.
BestResponses pure_best_responses(const BimatrixGame& game, Player player,
                                  const MixedStrategy& opponent);

/// Common sum k if u1 + u2 == k at every profile.
std::optional<Rational> is_constant_sum(const BimatrixGame& game);

enum class Dominance { Strict, Weak };

/// Actions that dominate every other action of `player` against every
/// opponent pure action. Weak dominance requires >= everywhere; strict
/// requires > everywhere.
std::vector<std::size_t> dominant_actions(const BimatrixGame& game, Player player, Dominance mode);

/// Pointwise comparison of the focal player's matrix. The opponent's
/// matrix is ignored. Throws DimensionError unless labels and shapes match.
ImprovementRelation improvement_relation(const BimatrixGame& before, const BimatrixGame& after,
                                         Player player);

BimatrixGame shift_player_payoffs(const BimatrixGame& game, Player player, const Rational& delta);

}  // namespace eqc
