#include "eqc/game.hpp"

#include <algorithm>

namespace eqc {

Player player_from_int(int n) {
  if (n == 1) return Player::One;
  if (n == 2) return Player::Two;
  throw std::invalid_argument("player must be 1 or 2, got " + std::to_string(n));
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

MixedStrategy::MixedStrategy(std::vector<Rational> probabilities) : p_(std::move(probabilities)) {
  if (p_.empty()) throw std::invalid_argument("mixed strategy over no actions");
  Rational total;
  for (const auto& x : p_) {
    if (x.sign() < 0) throw std::invalid_argument("negative probability " + x.str());
    total += x;
  }
  if (total != Rational(1)) throw std::invalid_argument("probabilities sum to " + total.str());
}

MixedStrategy MixedStrategy::pure(std::size_t actions, std::size_t chosen) {
  std::vector<Rational> p(actions);
  p.at(chosen) = 1;
  return MixedStrategy(std::move(p));
}

MixedStrategy MixedStrategy::uniform(std::size_t actions) {
  return MixedStrategy(std::vector<Rational>(actions, Rational(1, static_cast<long>(actions))));
}

std::vector<std::size_t> MixedStrategy::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < p_.size(); ++i)
    if (!p_[i].is_zero()) s.push_back(i);
  return s;
}

BimatrixGame::BimatrixGame(std::string name, std::vector<std::string> row_actions,
                           std::vector<std::string> col_actions, Matrix u1, Matrix u2)
    : name_(std::move(name)),
      row_actions_(std::move(row_actions)),
      col_actions_(std::move(col_actions)),
      u1_(std::move(u1)),
      u2_(std::move(u2)) {
  if (row_actions_.empty() || col_actions_.empty())
    throw DimensionError("game '" + name_ + "' needs at least one action per player");
  for (const Matrix* m : {&u1_, &u2_})
    if (m->rows() != row_actions_.size() || m->cols() != col_actions_.size())
      throw DimensionError("payoff matrix shape does not match action labels in '" + name_ + "'");
}

BimatrixGame BimatrixGame::renamed(std::string name) const {
  BimatrixGame g = *this;
  g.name_ = std::move(name);
  return g;
}

BimatrixGame BimatrixGame::restricted(std::span<const std::size_t> rows,
                                      std::span<const std::size_t> cols) const {
  std::vector<std::string> rl, cl;
  Matrix a(rows.size(), cols.size()), b(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    rl.push_back(row_actions_.at(rows[r]));
    for (std::size_t c = 0; c < cols.size(); ++c) {
      a(r, c) = u1_(rows[r], cols[c]);
      b(r, c) = u2_(rows[r], cols[c]);
    }
  }
  for (auto c : cols) cl.push_back(col_actions_.at(c));
  return BimatrixGame(name_, std::move(rl), std::move(cl), std::move(a), std::move(b));
}

std::string to_string(ImprovementKind kind) {
  switch (kind) {
    case ImprovementKind::ImprovedSomewhere: return "ImprovedSomewhere";
    case ImprovementKind::Unchanged: return "Unchanged";
    case ImprovementKind::NotImproved: return "NotImproved";
  }
  return "?";
}

Rational expected_payoff(const BimatrixGame& game, const MixedStrategy& s1, const MixedStrategy& s2,
                         Player player) {
  if (s1.size() != game.rows() || s2.size() != game.cols())
    throw DimensionError("strategy lengths do not match game dimensions");
  const Matrix& u = game.payoffs(player);
  Rational total;
  for (std::size_t r = 0; r < game.rows(); ++r) {
    if (s1[r].is_zero()) continue;
    Rational row;
    for (std::size_t c = 0; c < game.cols(); ++c)
      if (!s2[c].is_zero()) row += s2[c] * u(r, c);
    total += s1[r] * row;
  }
  return total;
}

BestResponses pure_best_responses(const BimatrixGame& game, Player player,
                                  const MixedStrategy& opponent) {
  const std::size_t own = game.action_count(player);
  if (opponent.size() != game.action_count(other(player)))
    throw DimensionError("opponent strategy length does not match game");
  BestResponses best;
  for (std::size_t a = 0; a < own; ++a) {
    Rational v;
    for (std::size_t b = 0; b < opponent.size(); ++b) {
      if (opponent[b].is_zero()) continue;
      v += opponent[b] * (player == Player::One ? game.payoff(player, a, b) : game.payoff(player, b, a));
    }
    if (best.actions.empty() || v > best.value) {
      best.actions = {a};
      best.value = v;
    } else if (v == best.value) {
      best.actions.push_back(a);
    }
  }
  return best;
}

std::optional<Rational> is_constant_sum(const BimatrixGame& game) {
  const Rational k = game.u1()(0, 0) + game.u2()(0, 0);
  for (std::size_t r = 0; r < game.rows(); ++r)
    for (std::size_t c = 0; c < game.cols(); ++c)
      if (game.u1()(r, c) + game.u2()(r, c) != k) return std::nullopt;
  return k;
}

std::vector<std::size_t> dominant_actions(const BimatrixGame& game, Player player, Dominance mode) {
  const std::size_t own = game.action_count(player);
  const std::size_t opp = game.action_count(other(player));
  auto at = [&](std::size_t a, std::size_t b) -> const Rational& {
    return player == Player::One ? game.payoff(player, a, b) : game.payoff(player, b, a);
  };
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < own; ++a) {
    bool dominates = true;
    for (std::size_t other_a = 0; other_a < own && dominates; ++other_a) {
      if (other_a == a) continue;
      for (std::size_t b = 0; b < opp && dominates; ++b) {
        auto c = at(a, b) <=> at(other_a, b);
        dominates = mode == Dominance::Strict ? c > 0 : c >= 0;
      }
    }
    if (dominates) out.push_back(a);
  }
  return out;
}

ImprovementRelation improvement_relation(const BimatrixGame& before, const BimatrixGame& after,
                                         Player player) {
  if (before.row_actions() != after.row_actions() || before.col_actions() != after.col_actions())
    throw DimensionError("games '" + before.name() + "' and '" + after.name() +
                         "' have different action spaces");
  const Matrix& u = before.payoffs(player);
  const Matrix& v = after.payoffs(player);
  ImprovementRelation rel;
  for (std::size_t r = 0; r < before.rows(); ++r) {
    for (std::size_t c = 0; c < before.cols(); ++c) {
      if (v(r, c) < u(r, c)) return {ImprovementKind::NotImproved, ActionProfile{r, c}, false};
      if (v(r, c) > u(r, c) && !rel.witness) {
        rel.kind = ImprovementKind::ImprovedSomewhere;
        rel.witness = ActionProfile{r, c};
      }
    }
  }
  return rel;
}

BimatrixGame shift_player_payoffs(const BimatrixGame& game, Player player, const Rational& delta) {
  Matrix u = game.payoffs(player);
  for (std::size_t r = 0; r < u.rows(); ++r)
    for (std::size_t c = 0; c < u.cols(); ++c) u(r, c) += delta;
  return player == Player::One
             ? BimatrixGame(game.name(), game.row_actions(), game.col_actions(), std::move(u), game.u2())
             : BimatrixGame(game.name(), game.row_actions(), game.col_actions(), game.u1(), std::move(u));
}

}  // namespace eqc
