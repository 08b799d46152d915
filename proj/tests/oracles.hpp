#pragma once

// Independent reference computations used to cross-check the library.
// Nothing here calls into the equilibrium code.

#include <algorithm>
#include <optional>
#include <vector>

#include "eqc/game.hpp"

namespace oracle {

using eqc::BimatrixGame;
using eqc::Matrix;
using eqc::Rational;

inline BimatrixGame make_game(const std::vector<std::vector<Rational>>& u1,
                              const std::vector<std::vector<Rational>>& u2, std::string name = "g") {
  std::vector<std::string> rows, cols;
  for (std::size_t i = 0; i < u1.size(); ++i) rows.push_back("r" + std::to_string(i));
  for (std::size_t j = 0; j < u1.at(0).size(); ++j) cols.push_back("c" + std::to_string(j));
  return BimatrixGame(std::move(name), rows, cols, Matrix::from_rows(u1), Matrix::from_rows(u2));
}

// Expected payoff computed by the double sum, without the library helper.
inline Rational payoff(const Matrix& u, const std::vector<Rational>& x, const std::vector<Rational>& y) {
  Rational v;
  for (std::size_t i = 0; i < u.rows(); ++i)
    for (std::size_t j = 0; j < u.cols(); ++j) v += x[i] * y[j] * u(i, j);
  return v;
}

// Nash condition: no pure deviation gains.
inline bool is_nash(const BimatrixGame& g, const std::vector<Rational>& x, const std::vector<Rational>& y) {
  const Matrix& a = g.payoffs(eqc::Player::One);
  const Matrix& b = g.payoffs(eqc::Player::Two);
  const Rational v1 = payoff(a, x, y), v2 = payoff(b, x, y);
  for (std::size_t i = 0; i < g.rows(); ++i) {
    std::vector<Rational> e(g.rows());
    e[i] = 1;
    if (payoff(a, e, y) > v1) return false;
  }
  for (std::size_t j = 0; j < g.cols(); ++j) {
    std::vector<Rational> e(g.cols());
    e[j] = 1;
    if (payoff(b, x, e) > v2) return false;
  }
  return true;
}

struct Point2 {
  Rational p;  // probability of the first row
  Rational q;  // probability of the first column
  friend bool operator==(const Point2&, const Point2&) = default;
  friend auto operator<=>(const Point2& a, const Point2& b) {
    if (auto c = a.p <=> b.p; c != 0) return c;
    return a.q <=> b.q;
  }
};

// Closed form for nondegenerate 2x2 games: pure equilibria plus the interior
// point where each player makes the other indifferent, if it lies strictly
// inside the square. Returns nullopt when the game has payoff ties that make
// the closed form inapplicable.
inline std::optional<std::vector<Point2>> solve_2x2(const BimatrixGame& g) {
  const Matrix& a = g.payoffs(eqc::Player::One);
  const Matrix& b = g.payoffs(eqc::Player::Two);
  if (a(0, 0) == a(1, 0) || a(0, 1) == a(1, 1) || b(0, 0) == b(0, 1) || b(1, 0) == b(1, 1)) return std::nullopt;
  std::vector<Point2> out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (a(i, j) > a(1 - i, j) && b(i, j) > b(i, 1 - j)) out.push_back({i == 0 ? 1 : 0, j == 0 ? 1 : 0});
  const Rational da = a(0, 0) - a(0, 1) - a(1, 0) + a(1, 1);
  const Rational db = b(0, 0) - b(0, 1) - b(1, 0) + b(1, 1);
  if (!da.is_zero() && !db.is_zero()) {
    const Rational q = (a(1, 1) - a(0, 1)) / da;
    const Rational p = (b(1, 1) - b(1, 0)) / db;
    if (q.sign() > 0 && q < 1 && p.sign() > 0 && p < 1) out.push_back({p, q});
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Largest guaranteed payoff over the grid {k/n} for a player with two actions.
inline Rational grid_maxmin_two_actions(const BimatrixGame& g, eqc::Player p, long n) {
  std::optional<Rational> best;
  for (long k = 0; k <= n; ++k) {
    const Rational w(k, n);
    std::optional<Rational> worst;
    const std::size_t opp = g.action_count(eqc::other(p));
    for (std::size_t j = 0; j < opp; ++j) {
      const Rational v = p == eqc::Player::One ? w * g.payoff(p, 0, j) + (1 - w) * g.payoff(p, 1, j)
                                               : w * g.payoff(p, j, 0) + (1 - w) * g.payoff(p, j, 1);
      if (!worst || v < *worst) worst = v;
    }
    if (!best || *worst > *best) best = worst;
  }
  return *best;
}

// Worst payoff a mixed strategy guarantees against pure replies.
inline Rational guarantee(const BimatrixGame& g, eqc::Player p, const std::vector<Rational>& s) {
  std::optional<Rational> worst;
  for (std::size_t j = 0; j < g.action_count(eqc::other(p)); ++j) {
    Rational v;
    for (std::size_t i = 0; i < s.size(); ++i)
      v += s[i] * (p == eqc::Player::One ? g.payoff(p, i, j) : g.payoff(p, j, i));
    if (!worst || v < *worst) worst = v;
  }
  return *worst;
}

}  // namespace oracle
