#include <doctest.h>

#include <algorithm>
#include <random>

#include "eqc/equilibria.hpp"
#include "eqc/scenarios.hpp"
#include "eqc/search.hpp"
#include "oracles.hpp"

using namespace eqc;

namespace {

MixedStrategy mixed(std::initializer_list<Rational> p) { return MixedStrategy(std::vector<Rational>(p)); }

BimatrixGame random_game(std::mt19937_64& rng, std::size_t m, std::size_t n, long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(n)), b = a;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = d(rng), b[i][j] = d(rng);
  return oracle::make_game(a, b);
}

}  // namespace

TEST_SUITE("equilibria") {
  TEST_CASE("pure equilibria") {
    auto pure = pure_equilibria(chicken_game());
    REQUIRE(pure.size() == 2);
    CHECK(pure[0].s1 == MixedStrategy::pure(2, 0));
    CHECK(pure[0].s2 == MixedStrategy::pure(2, 1));
    CHECK(pure[0].payoff1 == 1);
    CHECK(pure[0].payoff2 == 3);
    CHECK(pure[1].payoff1 == 3);
    CHECK(pure[1].payoff2 == 1);

    pure = pure_equilibria(subsidy_game());
    REQUIRE(pure.size() == 1);
    CHECK(pure[0].support1 == std::vector<std::size_t>{1});
    CHECK(pure[0].support2 == std::vector<std::size_t>{0});

    auto zeros = oracle::make_game({{0, 0, 0}, {0, 0, 0}}, {{0, 0, 0}, {0, 0, 0}});
    CHECK(pure_equilibria(zeros).size() == 6);
  }

  TEST_CASE("chicken") {
    const auto set = enumerate_equilibria(chicken_game());
    CHECK_FALSE(set.game_degenerate);
    REQUIRE(set.equilibria.size() == 3);
    const auto& mix = set.equilibria[2];
    CHECK(mix.s1 == mixed({Rational(11, 13), Rational(2, 13)}));
    CHECK(mix.s2 == mixed({Rational(11, 13), Rational(2, 13)}));
    CHECK(mix.payoff1 == 1);
    CHECK(mix.payoff2 == 1);
    for (const auto& e : set.equilibria) CHECK(certify_equilibrium(chicken_game(), e));
  }

  TEST_CASE("costed counterexample has a unique mixed equilibrium") {
    const auto set = enumerate_equilibria(realize(costsum_game()));
    REQUIRE(set.equilibria.size() == 1);
    CHECK(set.equilibria[0].s1 == MixedStrategy::uniform(2));
    CHECK(set.equilibria[0].s2 == MixedStrategy::uniform(2));
    CHECK(set.equilibria[0].payoff1 == Rational(5, 2));
    CHECK(set.equilibria[0].payoff2 == 1);
  }

  TEST_CASE("trivial games") {
    auto one = oracle::make_game({{7}}, {{-2}});
    auto set = enumerate_equilibria(one);
    REQUIRE(set.equilibria.size() == 1);
    CHECK(set.equilibria[0].payoff1 == 7);
    CHECK(set.equilibria[0].payoff2 == -2);

    // every profile is an equilibrium; the extreme ones are the pure profiles
    auto zeros = oracle::make_game({{0, 0}, {0, 0}}, {{0, 0}, {0, 0}});
    set = enumerate_equilibria(zeros);
    CHECK(set.game_degenerate);
    CHECK(set.equilibria.size() == 4);
    for (const auto& e : set.equilibria) CHECK(e.degenerate);
  }

  TEST_CASE("maxmin") {
    auto pennies = oracle::make_game({{1, -1}, {-1, 1}}, {{-1, 1}, {1, -1}});
    auto r = maxmin(pennies, Player::One);
    CHECK(r.value == 0);
    CHECK(r.strategy == MixedStrategy::uniform(2));
    CHECK(maxmin(pennies, Player::Two).value == 0);

    const auto base = costsum_game().base();
    r = maxmin(base, Player::One);
    CHECK(r.value == 2);
    CHECK(r.strategy == MixedStrategy::pure(2, 0));
    CHECK(oracle::grid_maxmin_two_actions(base, Player::One, 840) == 2);
    CHECK(maxmin(base, Player::Two).value == 4);

    auto row = oracle::make_game({{4, -1, 6}}, {{0, 0, 0}});
    CHECK(maxmin(row, Player::One).value == -1);
  }

  TEST_CASE("maxmin against a grid oracle") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 100; ++t) {
      const auto g = random_game(rng, 2, 2 + t % 3, -5, 5);
      const auto r = maxmin(g, Player::One);
      // the LP strategy guarantees its value, and no grid point beats it
      CHECK(oracle::guarantee(g, Player::One, r.strategy.probabilities()) == r.value);
      CHECK(oracle::grid_maxmin_two_actions(g, Player::One, 360) <= r.value);
      const auto c = maxmin(g, Player::Two);
      CHECK(oracle::guarantee(g, Player::Two, c.strategy.probabilities()) == c.value);
    }
  }

  TEST_CASE("certify") {
    const auto g = chicken_game();
    auto e = make_equilibrium(g, mixed({Rational(11, 13), Rational(2, 13)}), mixed({Rational(11, 13), Rational(2, 13)}));
    CHECK(certify_equilibrium(g, e));
    CHECK_FALSE(certify_equilibrium(g, make_equilibrium(g, MixedStrategy::pure(2, 0), MixedStrategy::pure(2, 0))));
    for (const auto& p : pure_equilibria(g)) CHECK(certify_equilibrium(g, p));
    e.payoff1 = 2;
    CHECK_FALSE(certify_equilibrium(g, e));
  }

  TEST_CASE("2x2 closed form oracle") {
    std::mt19937_64 rng(11);
    int compared = 0;
    for (int t = 0; t < 1000; ++t) {
      const auto g = random_game(rng, 2, 2, -3, 3);
      auto expected = oracle::solve_2x2(g);
      if (!expected) continue;
      ++compared;
      std::vector<oracle::Point2> got;
      for (const auto& e : enumerate_equilibria(g, Execution::Serial).equilibria) got.push_back({e.s1[0], e.s2[0]});
      std::sort(got.begin(), got.end());
      CHECK(got == *expected);
    }
    CHECK(compared > 300);
  }

  TEST_CASE("parallel, serial and reference enumeration agree") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 60; ++t) {
      const auto g = random_game(rng, 2 + t % 4, 2 + (t / 4) % 4, -4, 4);
      const auto ref = support_enumeration_reference(g);
      const auto ser = support_enumeration(g, Execution::Serial);
      const auto par = support_enumeration(g, Execution::Parallel);
      REQUIRE(ref.size() == ser.size());
      REQUIRE(ser.size() == par.size());
      for (std::size_t i = 0; i < ref.size(); ++i) {
        CHECK(ref[i].same_profile(ser[i]));
        CHECK(ser[i].same_profile(par[i]));
        CHECK(ref[i].payoff1 == par[i].payoff1);
      }
    }
  }

  TEST_CASE("support enumeration matches vertex enumeration on nondegenerate games") {
    std::mt19937_64 rng(17);
    int nondegenerate = 0;
    for (int t = 0; t < 150; ++t) {
      const auto g = random_game(rng, 2 + t % 4, 2 + (t / 3) % 4, -50, 50);
      const auto v = enumerate_vertices(g, Execution::Serial);
      if (!v.nondegenerate) continue;
      ++nondegenerate;
      auto se = support_enumeration(g, Execution::Serial);
      REQUIRE(se.size() == v.extreme_equilibria.size());
      std::sort(se.begin(), se.end(), equilibrium_order);
      auto ve = v.extreme_equilibria;
      std::sort(ve.begin(), ve.end(), equilibrium_order);
      for (std::size_t i = 0; i < se.size(); ++i) CHECK(se[i].same_profile(ve[i]));
      CHECK(se.size() % 2 == 1);
    }
    CHECK(nondegenerate > 100);
  }

  TEST_CASE("every listed equilibrium is a Nash equilibrium") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 120; ++t) {
      const auto g = random_game(rng, 1 + t % 5, 1 + (t / 5) % 5, -2, 2);  // narrow range: many ties
      const auto set = enumerate_equilibria(g, Execution::Serial);
      REQUIRE_FALSE(set.equilibria.empty());
      for (const auto& e : set.equilibria) {
        CHECK(oracle::is_nash(g, e.s1.probabilities(), e.s2.probabilities()));
        CHECK(certify_equilibrium(g, e));
      }
      // pure equilibria are exactly the singleton-support records
      std::size_t singletons = 0;
      for (const auto& e : set.equilibria) singletons += e.support1.size() == 1 && e.support2.size() == 1;
      CHECK(singletons == pure_equilibria(g).size());
      CHECK(set.game_degenerate == !is_nondegenerate(g));
    }
  }

  TEST_CASE("enumeration order is deterministic") {
    const auto set = enumerate_equilibria(chicken_game());
    for (std::size_t i = 1; i < set.equilibria.size(); ++i)
      CHECK(equilibrium_order(set.equilibria[i - 1], set.equilibria[i]));
  }

  TEST_CASE("degenerate question game") {
    const auto g = build_question_game(freeride_spec());
    const auto set = enumerate_equilibria(g);
    CHECK(set.game_degenerate);
    REQUIRE(set.equilibria.size() == 1);
    CHECK(set.equilibria[0].s1 == MixedStrategy::pure(11, 10));
    CHECK(set.equilibria[0].s2 == MixedStrategy::pure(11, 0));
  }
}
