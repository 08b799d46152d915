#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "eqc/execution.hpp"
#include "eqc/game.hpp"

namespace eqc {

struct Equilibrium {
  MixedStrategy s1;
  MixedStrategy s2;
  Rational payoff1;
  Rational payoff2;
  std::vector<std::size_t> support1;
  std::vector<std::size_t> support2;
  /// A best-response set strictly contains the corresponding support.
  bool degenerate = false;

  const Rational& payoff(Player p) const { return p == Player::One ? payoff1 : payoff2; }
  const MixedStrategy& strategy(Player p) const { return p == Player::One ? s1 : s2; }
  bool same_profile(const Equilibrium& o) const { return s1 == o.s1 && s2 == o.s2; }
};

struct EquilibriumSet {
  std::vector<Equilibrium> equilibria;
  /// Some mixed strategy with support size k has more than k pure best
  /// responses. The listed equilibria are then the extreme equilibria.
  bool game_degenerate = false;
};

struct MaxminResult {
  MixedStrategy strategy;
  Rational value;
};

/// Builds the record for (s1, s2): supports, payoffs and the degeneracy flag.
/// Does not check that the profile is an equilibrium.
Equilibrium make_equilibrium(const BimatrixGame& game, MixedStrategy s1, MixedStrategy s2);

/// Pure profiles where each action is a best response to the other,
/// row-major order.
std::vector<Equilibrium> pure_equilibria(const BimatrixGame& game);

/// All Nash equilibria by support enumeration over equal-size support pairs.
/// When the game is degenerate the result is completed with every extreme
/// equilibrium (completely labeled vertex pairs of the best-response
/// polytopes), so worst and best payoffs over the whole equilibrium set are
/// attained among the listed records.
///
/// Order: support size, then support indices lexicographically.
EquilibriumSet enumerate_equilibria(const BimatrixGame& game, Execution exec = Execution::Parallel);

/// Equal-size support enumeration only (no degeneracy completion).
std::vector<Equilibrium> support_enumeration(const BimatrixGame& game, Execution exec = Execution::Parallel);

/// Straightforward single-threaded support enumeration. Kept as the
/// reference that the parallel kernel is tested and benchmarked against.
std::vector<Equilibrium> support_enumeration_reference(const BimatrixGame& game);

/// Vertex of {z >= 0 : M^T z <= 1} with its label sets as bitmasks.
struct PolytopeVertex {
  std::vector<Rational> z;
  std::uint64_t zero_mask = 0;   // variables at zero
  std::uint64_t tight_mask = 0;  // constraints holding with equality
};

struct VertexEnumeration {
  std::vector<PolytopeVertex> row_polytope;  // over row-player mixtures
  std::vector<PolytopeVertex> col_polytope;  // over column-player mixtures
  bool nondegenerate = true;
  std::vector<Equilibrium> extreme_equilibria;
};

/// Enumerates vertices of both best-response polytopes and pairs the
/// completely labeled ones. Independent of support enumeration.
VertexEnumeration enumerate_vertices(const BimatrixGame& game, Execution exec = Execution::Parallel);

/// No mixed strategy with support size k has more than k pure best responses.
bool is_nondegenerate(const BimatrixGame& game);

/// Exact maxmin (defense) strategy and value via the simplex method.
MaxminResult maxmin(const BimatrixGame& game, Player player);

/// Supports inside the best-response sets and recorded payoffs exact.
bool certify_equilibrium(const BimatrixGame& game, const Equilibrium& e);

/// Orders equilibria by support size, supports, then strategies.
bool equilibrium_order(const Equilibrium& a, const Equilibrium& b);

}  // namespace eqc
