// Single-threaded support enumeration, written for clarity rather than speed.
// The OpenMP kernel in equilibria.cpp must agree with it record for record.

#include <algorithm>

#include "eqc/detail/parallel.hpp"
#include "eqc/equilibria.hpp"
#include "eqc/linalg.hpp"

namespace eqc {

namespace {

// Mixture of `mixer` over `mix_set` making `player`'s actions in `own_set` indifferent.
std::optional<std::vector<Rational>> solve_mixture(const BimatrixGame& game, Player player,
                                                   const std::vector<std::size_t>& own_set,
                                                   const std::vector<std::size_t>& mix_set) {
  const std::size_t k = own_set.size();
  linalg::SquareSystem sys(k + 1);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < k; ++c)
      sys.at(r, c) = player == Player::One ? game.payoff(player, own_set[r], mix_set[c])
                                           : game.payoff(player, mix_set[c], own_set[r]);
    sys.at(r, k) = -1;
  }
  for (std::size_t c = 0; c < k; ++c) sys.at(k, c) = 1;
  sys.rhs[k] = 1;
  auto sol = linalg::solve(std::move(sys));
  if (!sol) return std::nullopt;
  std::vector<Rational> full(game.action_count(other(player)));
  for (std::size_t c = 0; c < k; ++c) {
    if ((*sol)[c].sign() <= 0) return std::nullopt;
    full[mix_set[c]] = (*sol)[c];
  }
  return full;
}

}  // namespace

std::vector<Equilibrium> support_enumeration_reference(const BimatrixGame& game) {
  std::vector<Equilibrium> out;
  for (std::size_t k = 1; k <= std::min(game.rows(), game.cols()); ++k) {
    for (const auto& rows : detail::combinations(game.rows(), k)) {
      for (const auto& cols : detail::combinations(game.cols(), k)) {
        auto y = solve_mixture(game, Player::One, rows, cols);
        if (!y) continue;
        auto x = solve_mixture(game, Player::Two, cols, rows);
        if (!x) continue;
        MixedStrategy s1(std::move(*x)), s2(std::move(*y));
        auto br1 = pure_best_responses(game, Player::One, s2).actions;
        auto br2 = pure_best_responses(game, Player::Two, s1).actions;
        if (!std::includes(br1.begin(), br1.end(), rows.begin(), rows.end())) continue;
        if (!std::includes(br2.begin(), br2.end(), cols.begin(), cols.end())) continue;
        out.push_back(make_equilibrium(game, std::move(s1), std::move(s2)));
      }
    }
  }
  return out;
}

}  // namespace eqc
