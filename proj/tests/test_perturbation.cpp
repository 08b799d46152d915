#include <doctest.h>

#include "eqc/perturbation.hpp"
#include "eqc/scenarios.hpp"
#include "oracles.hpp"

using namespace eqc;

TEST_SUITE("perturbation") {
  TEST_CASE("costed game validation") {
    CHECK_THROWS_AS(CostedGame(chicken_game(), {0, 0}, {0, 0}), NotConstantSum);
    CHECK_THROWS_AS(CostedGame(costsum_game().base(), {0}, {0, 0}), DimensionError);
    CHECK(costsum_game().constant() == 6);
  }

  TEST_CASE("realize") {
    const auto g = realize(costsum_game());
    CHECK(g.payoffs(Player::One) == Matrix::from_rows({{Rational(9, 2), Rational(1, 2)}, {4, 1}}));
    CHECK(g.payoffs(Player::Two) == Matrix::from_rows({{0, Rational(1, 2)}, {2, Rational(3, 2)}}));

    const auto base = costsum_game().base();
    CHECK(realize(CostedGame(base, {0, 0}, {0, 0})).payoffs(Player::One) == base.payoffs(Player::One));
    const auto flat = realize(CostedGame(base, {0, 0}, {3, 3}));
    CHECK(flat.payoffs(Player::Two) == shift_player_payoffs(base, Player::Two, -3).payoffs(Player::Two));
  }

  TEST_CASE("h transform") {
    const auto h = h_transform(costsum_game());
    CHECK(h.payoffs(Player::One) == Matrix::from_rows({{Rational(9, 2), 4}, {4, Rational(9, 2)}}));
    CHECK(h.payoffs(Player::Two) == Matrix::from_rows({{Rational(3, 2), 2}, {2, Rational(3, 2)}}));
    CHECK(is_constant_sum(h) == Rational(6));

    const auto base = costsum_game().base();
    const auto zero = h_transform(CostedGame(base, {0, 0}, {0, 0}));
    CHECK(zero.payoffs(Player::One) == base.payoffs(Player::One));
    CHECK(zero.payoffs(Player::Two) == base.payoffs(Player::Two));

    // constant opponent cost c: u^h_1 = u_1 + c
    const CostedGame flat(base, {1, Rational(5, 2)}, {4, 4});
    const auto u = realize(flat), hf = h_transform(flat);
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t c = 0; c < 2; ++c) CHECK(hf.payoff(Player::One, r, c) == u.payoff(Player::One, r, c) + 4);
  }

  TEST_CASE("worst and best payoffs") {
    const auto set = enumerate_equilibria(chicken_game());
    auto b = worst_best_payoffs(set, Player::One);
    CHECK(b.worst == 1);
    CHECK(b.best == 3);
    b = worst_best_payoffs(enumerate_equilibria(subsidy_game()), Player::One);
    CHECK(b.worst == b.best);
    b = worst_best_payoffs(enumerate_equilibria(build_question_game(freeride_spec())), Player::Two);
    CHECK(b.worst == 10);
    CHECK(b.best == 10);
    CHECK_THROWS_AS(worst_best_payoffs(EquilibriumSet{}, Player::One), std::logic_error);
  }

  TEST_CASE("compare") {
    auto rep = compare_improvement(factoring_restricted_game(), chicken_game(), Player::One, false);
    CHECK(rep.before_worst == 3);
    CHECK(rep.after_worst == 1);
    CHECK(rep.verdict == Verdict::Hurt);
    CHECK(rep.relation.availability);
    CHECK(rep.relation.kind == ImprovementKind::ImprovedSomewhere);

    rep = compare_improvement(subsidy_game(), subsidized_game(), Player::One, false);
    CHECK(rep.before_worst == 3);
    CHECK(rep.after_worst == 0);
    CHECK(rep.verdict == Verdict::Hurt);

    rep = compare_improvement(chicken_game(), chicken_game(), Player::Two, false);
    CHECK(rep.verdict == Verdict::Unchanged);

    rep = compare_improvement(subsidized_game(), subsidy_game(), Player::One, false);
    CHECK(rep.verdict == Verdict::NotHurt);
    CHECK(rep.relation.kind == ImprovementKind::NotImproved);

    CHECK(value_of_improvement(factoring_restricted_game(), chicken_game(), Player::One) == -2);
    CHECK(value_of_improvement(subsidy_game(), subsidized_game(), Player::One) == -3);
    CHECK(value_of_improvement(chicken_game(), chicken_game(), Player::One) == 0);
  }

  TEST_CASE("degenerate comparisons are guarded") {
    const auto before = build_question_game(freeride_spec());
    const auto after = build_question_game(freeride_smart_spec());
    auto rep = compare_improvement(before, after, Player::Two, false);
    CHECK(rep.verdict == Verdict::Indeterminate);
    REQUIRE(rep.degeneracy_note);
    CHECK(rep.degeneracy_note->find("extreme equilibria") != std::string::npos);
    rep = compare_improvement(before, after, Player::Two, true);
    CHECK(rep.verdict == Verdict::Hurt);
    CHECK(rep.before_worst == 10);
    CHECK(rep.after_worst == 9);
    CHECK_THROWS_AS(value_of_improvement(before, after, Player::Two), std::invalid_argument);
  }

  TEST_CASE("availability relation") {
    auto rel = availability_relation(factoring_restricted_game(), chicken_game(), Player::One);
    CHECK(rel.availability);
    CHECK(rel.kind == ImprovementKind::ImprovedSomewhere);
    CHECK_THROWS_AS(availability_relation(chicken_game(), factoring_restricted_game(), Player::One), DimensionError);
    rel = availability_relation(chicken_game(), chicken_game(), Player::One);
    CHECK_FALSE(rel.availability);
    CHECK(rel.kind == ImprovementKind::Unchanged);
  }

  TEST_CASE("player two's payoff after the cost cut follows the computation") {
    // (a1, b2) pays player 2 base 4 minus cost 7/2
    const auto after = realize(costsum_game().with_cost(Player::One, {0, 0}));
    const auto set = enumerate_equilibria(after);
    REQUIRE(set.equilibria.size() == 1);
    CHECK(set.equilibria[0].payoff1 == 2);
    CHECK(set.equilibria[0].payoff2 == Rational(1, 2));
  }
}
