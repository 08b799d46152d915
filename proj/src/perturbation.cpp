#include "eqc/perturbation.hpp"

#include <algorithm>
#include <stdexcept>

namespace eqc {

CostedGame::CostedGame(BimatrixGame base, std::vector<Rational> cost1, std::vector<Rational> cost2)
    : base_(std::move(base)), cost1_(std::move(cost1)), cost2_(std::move(cost2)) {
  auto k = is_constant_sum(base_);
  if (!k) throw NotConstantSum("base game '" + base_.name() + "' is not constant-sum");
  constant_ = *k;
  if (cost1_.size() != base_.rows() || cost2_.size() != base_.cols())
    throw DimensionError("cost vector lengths do not match action counts of '" + base_.name() + "'");
}

CostedGame CostedGame::with_cost(Player p, std::vector<Rational> cost) const {
  return p == Player::One ? CostedGame(base_, std::move(cost), cost2_)
                          : CostedGame(base_, cost1_, std::move(cost));
}

namespace {

BimatrixGame adjust(const CostedGame& g, bool add_opponent_cost) {
  const BimatrixGame& base = g.base();
  Matrix u1 = base.u1(), u2 = base.u2();
  for (std::size_t r = 0; r < base.rows(); ++r) {
    for (std::size_t c = 0; c < base.cols(); ++c) {
      u1(r, c) -= g.cost1()[r];
      u2(r, c) -= g.cost2()[c];
      if (add_opponent_cost) {
        u1(r, c) += g.cost2()[c];
        u2(r, c) += g.cost1()[r];
      }
    }
  }
  return BimatrixGame(base.name(), base.row_actions(), base.col_actions(), std::move(u1), std::move(u2));
}

std::optional<std::size_t> find_label(const std::vector<std::string>& labels, const std::string& l) {
  auto it = std::find(labels.begin(), labels.end(), l);
  if (it == labels.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels.begin());
}

}  // namespace

BimatrixGame realize(const CostedGame& costed) { return adjust(costed, false); }

BimatrixGame h_transform(const CostedGame& costed) { return adjust(costed, true); }

PayoffBounds worst_best_payoffs(const EquilibriumSet& set, Player player) {
  if (set.equilibria.empty()) throw std::logic_error("no equilibrium found; finite games always have one");
  PayoffBounds b{set.equilibria.front().payoff(player), set.equilibria.front().payoff(player)};
  for (const auto& e : set.equilibria) {
    b.worst = std::min(b.worst, e.payoff(player));
    b.best = std::max(b.best, e.payoff(player));
  }
  return b;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Hurt: return "HURT";
    case Verdict::NotHurt: return "NOT_HURT";
    case Verdict::Unchanged: return "UNCHANGED";
    case Verdict::Indeterminate: return "INDETERMINATE";
  }
  return "?";
}

ImprovementRelation availability_relation(const BimatrixGame& before, const BimatrixGame& after,
                                          Player player) {
  if (before.row_actions() == after.row_actions() && before.col_actions() == after.col_actions())
    return improvement_relation(before, after, player);

  auto map_labels = [&](const std::vector<std::string>& from, const std::vector<std::string>& to) {
    std::vector<std::size_t> idx;
    for (const auto& l : from) {
      auto i = find_label(to, l);
      if (!i || std::find(idx.begin(), idx.end(), *i) != idx.end())
        throw DimensionError("action '" + l + "' of '" + before.name() + "' is missing from '" +
                             after.name() + "'");
      idx.push_back(*i);
    }
    return idx;
  };
  const auto rows = map_labels(before.row_actions(), after.row_actions());
  const auto cols = map_labels(before.col_actions(), after.col_actions());
  ImprovementRelation rel = improvement_relation(before, after.restricted(rows, cols), player);
  if (rel.witness) rel.witness = ActionProfile{rows[rel.witness->row], cols[rel.witness->col]};
  if (rel.kind == ImprovementKind::NotImproved) return rel;

  rel.availability = true;
  rel.kind = ImprovementKind::ImprovedSomewhere;
  if (!rel.witness) {
    for (std::size_t r = 0; r < after.rows() && !rel.witness; ++r)
      for (std::size_t c = 0; c < after.cols() && !rel.witness; ++c)
        if (std::find(rows.begin(), rows.end(), r) == rows.end() ||
            std::find(cols.begin(), cols.end(), c) == cols.end())
          rel.witness = ActionProfile{r, c};
  }
  return rel;
}

ComparisonReport compare_improvement(const BimatrixGame& before, const BimatrixGame& after, Player player,
                                     bool allow_degenerate, Execution exec) {
  ComparisonReport rep;
  rep.player = player;
  rep.relation = availability_relation(before, after, player);
  rep.before_equilibria = enumerate_equilibria(before, exec);
  rep.after_equilibria = enumerate_equilibria(after, exec);
  const auto b = worst_best_payoffs(rep.before_equilibria, player);
  const auto a = worst_best_payoffs(rep.after_equilibria, player);
  rep.before_worst = b.worst;
  rep.before_best = b.best;
  rep.after_worst = a.worst;
  rep.after_best = a.best;

  const bool degenerate = rep.before_equilibria.game_degenerate || rep.after_equilibria.game_degenerate;
  if (degenerate) {
    std::string which = rep.before_equilibria.game_degenerate && rep.after_equilibria.game_degenerate
                            ? "both games are"
                            : (rep.before_equilibria.game_degenerate ? "before-game is" : "after-game is");
    rep.degeneracy_note = which + " degenerate; bounds are taken over extreme equilibria";
  }
  if (degenerate && !allow_degenerate) {
    rep.verdict = Verdict::Indeterminate;
  } else {
    auto c = rep.after_worst <=> rep.before_worst;
    rep.verdict = c < 0 ? Verdict::Hurt : (c == 0 ? Verdict::Unchanged : Verdict::NotHurt);
  }
  return rep;
}

Rational value_of_improvement(const BimatrixGame& before, const BimatrixGame& after, Player player) {
  auto rep = compare_improvement(before, after, player, false);
  if (rep.verdict == Verdict::Indeterminate)
    throw std::invalid_argument("value of improvement is undefined on degenerate games");
  return rep.after_worst - rep.before_worst;
}

}  // namespace eqc
