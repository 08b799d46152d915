#include "eqc/equilibria.hpp"

#include <algorithm>
#include <bit>
#include <tuple>

#include "eqc/detail/integer_kernels.hpp"
#include "eqc/detail/parallel.hpp"
#include "eqc/linalg.hpp"

namespace eqc {

namespace {

constexpr std::size_t kMaxActions = 64;

std::uint64_t all_mask(std::size_t n) { return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

void check_size(const BimatrixGame& game) {
  if (game.rows() > kMaxActions || game.cols() > kMaxActions)
    throw DimensionError("equilibrium enumeration supports at most 64 actions per player");
}

struct SideSolution {
  std::vector<Rational> mix;  // over the opponent's actions
  Rational value;
  std::size_t best_responses = 0;
};

Rational ratio(const mpz_class& num, const mpz_class& den) { return Rational(mpq_class(num, den)); }

// Runs kernel on the int64 copy when there is one, retrying with GMP
// integers if any intermediate overflows.
template <class Kernel>
auto with_fallback(const detail::ScaledMatrix& m, Kernel&& kernel) {
  if (m.small) {
    try {
      return kernel(*m.small);
    } catch (const detail::Overflow&) {
    }
  }
  return kernel(m.big);
}

// Opponent mixture on `mix_set` that makes every own action in `own_set`
// indifferent, and those actions best responses. `u` is (own x opponent).
std::optional<SideSolution> indifference(const detail::ScaledMatrix& u, const std::vector<std::size_t>& own_set,
                                         const std::vector<std::size_t>& mix_set) {
  return with_fallback(u, [&](const auto& m) -> std::optional<SideSolution> {
    using Int = typename std::decay_t<decltype(m.data)>::value_type;
    const std::size_t k = own_set.size();
    const std::size_t w = k + 2;
    std::vector<Int> a((k + 1) * w, Int(0));
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = 0; c < k; ++c) a[r * w + c] = m(own_set[r], mix_set[c]);
      a[r * w + k] = -1;
    }
    for (std::size_t c = 0; c < k; ++c) a[k * w + c] = 1;
    a[k * w + k + 1] = 1;
    auto sol = detail::bareiss_solve(std::move(a), k + 1);
    if (!sol) return std::nullopt;
    for (std::size_t c = 0; c < k; ++c)
      if (detail::sign_of(sol->numerators[c]) <= 0) return std::nullopt;

    SideSolution out;
    const Int& value_num = sol->numerators[k];
    for (std::size_t a_idx = 0; a_idx < m.rows; ++a_idx) {
      Int v = 0;
      for (std::size_t c = 0; c < k; ++c) v = detail::add(v, detail::mul(m(a_idx, mix_set[c]), sol->numerators[c]));
      const int cmp = detail::sign_of(detail::sub(v, value_num));
      if (cmp > 0) return std::nullopt;
      if (cmp == 0) ++out.best_responses;
    }
    const mpz_class den = detail::to_mpz(sol->denominator);
    out.mix.assign(m.cols, Rational(0));
    for (std::size_t c = 0; c < k; ++c) out.mix[mix_set[c]] = ratio(detail::to_mpz(sol->numerators[c]), den);
    out.value = ratio(detail::to_mpz(value_num), den * u.scale);
    return out;
  });
}

std::optional<Equilibrium> try_support_pair(const detail::ScaledMatrix& a, const detail::ScaledMatrix& bt,
                                            const std::vector<std::size_t>& rows,
                                            const std::vector<std::size_t>& cols) {
  auto col_mix = indifference(a, rows, cols);
  if (!col_mix) return std::nullopt;
  auto row_mix = indifference(bt, cols, rows);
  if (!row_mix) return std::nullopt;
  const std::size_t k = rows.size();
  return Equilibrium{MixedStrategy(std::move(row_mix->mix)),
                     MixedStrategy(std::move(col_mix->mix)),
                     col_mix->value,
                     row_mix->value,
                     rows,
                     cols,
                     col_mix->best_responses > k || row_mix->best_responses > k};
}

Matrix positive_shift(const Matrix& m) {
  Rational lo = m(0, 0);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) lo = std::min(lo, m(r, c));
  Matrix out = m;
  const Rational shift = Rational(1) - lo;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) += shift;
  return out;
}

// Vertices of {z >= 0 : sum_v m(v, c) z_v <= 1 for every constraint c},
// m strictly positive. Each nonzero vertex is found from its exact support
// and a nonsingular choice of tight constraints.
std::vector<PolytopeVertex> polytope_vertices(const Matrix& positive, Execution exec) {
  const detail::ScaledMatrix m = detail::scale_to_integers(positive);
  const std::size_t vars = positive.rows();
  const std::size_t cons = positive.cols();
  std::vector<PolytopeVertex> out;
  out.push_back(PolytopeVertex{std::vector<Rational>(vars), all_mask(vars), 0});
  for (std::size_t k = 1; k <= std::min(vars, cons); ++k) {
    const auto var_sets = detail::combinations(vars, k);
    const auto con_sets = detail::combinations(cons, k);
    auto found = detail::collect_indexed<PolytopeVertex>(
        var_sets.size() * con_sets.size(), exec, [&](std::size_t idx) {
          const auto& vs = var_sets[idx / con_sets.size()];
          const auto& cs = con_sets[idx % con_sets.size()];
          return with_fallback(m, [&](const auto& mat) -> std::optional<PolytopeVertex> {
            using Int = typename std::decay_t<decltype(mat.data)>::value_type;
            const std::size_t w = k + 1;
            std::vector<Int> a(k * w, Int(0));
            for (std::size_t r = 0; r < k; ++r) {
              for (std::size_t c = 0; c < k; ++c) a[r * w + c] = mat(vs[c], cs[r]);
              a[r * w + k] = 1;
            }
            auto sol = detail::bareiss_solve(std::move(a), k);
            if (!sol) return std::nullopt;
            for (const auto& v : sol->numerators)
              if (detail::sign_of(v) <= 0) return std::nullopt;
            PolytopeVertex vert;
            vert.zero_mask = all_mask(vars);
            for (auto v : vs) vert.zero_mask &= ~(std::uint64_t{1} << v);
            for (std::size_t c = 0; c < cons; ++c) {
              Int lhs = 0;
              for (std::size_t i = 0; i < k; ++i) lhs = detail::add(lhs, detail::mul(mat(vs[i], c), sol->numerators[i]));
              const int cmp = detail::sign_of(detail::sub(lhs, sol->denominator));
              if (cmp > 0) return std::nullopt;
              if (cmp == 0) vert.tight_mask |= std::uint64_t{1} << c;
            }
            // the scaled system solves for z / scale
            const mpz_class den = detail::to_mpz(sol->denominator);
            vert.z.assign(vars, Rational(0));
            for (std::size_t i = 0; i < k; ++i)
              vert.z[vs[i]] = ratio(detail::to_mpz(sol->numerators[i]) * m.scale, den);
            return vert;
          });
        });
    for (auto& [idx, v] : found) out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.z < b.z; });
  out.erase(std::unique(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.z == b.z; }),
            out.end());
  return out;
}

MixedStrategy normalized(const std::vector<Rational>& z) {
  Rational total;
  for (const auto& v : z) total += v;
  std::vector<Rational> p;
  p.reserve(z.size());
  for (const auto& v : z) p.push_back(v / total);
  return MixedStrategy(std::move(p));
}

void sort_and_dedupe(std::vector<Equilibrium>& eqs) {
  std::sort(eqs.begin(), eqs.end(), equilibrium_order);
  eqs.erase(std::unique(eqs.begin(), eqs.end(),
                        [](const Equilibrium& a, const Equilibrium& b) { return a.same_profile(b); }),
            eqs.end());
}

}  // namespace

bool equilibrium_order(const Equilibrium& a, const Equilibrium& b) {
  auto key = [](const Equilibrium& e) {
    return std::tie(e.support1, e.support2, e.s1, e.s2);
  };
  const auto sa = a.support1.size() + a.support2.size();
  const auto sb = b.support1.size() + b.support2.size();
  if (sa != sb) return sa < sb;
  if (a.support1.size() != b.support1.size()) return a.support1.size() < b.support1.size();
  return key(a) < key(b);
}

Equilibrium make_equilibrium(const BimatrixGame& game, MixedStrategy s1, MixedStrategy s2) {
  Equilibrium e{s1, s2, expected_payoff(game, s1, s2, Player::One),
                expected_payoff(game, s1, s2, Player::Two), s1.support(), s2.support(), false};
  e.degenerate = pure_best_responses(game, Player::One, s2).actions.size() > e.support1.size() ||
                 pure_best_responses(game, Player::Two, s1).actions.size() > e.support2.size();
  return e;
}

std::vector<Equilibrium> pure_equilibria(const BimatrixGame& game) {
  std::vector<Equilibrium> out;
  for (std::size_t r = 0; r < game.rows(); ++r) {
    for (std::size_t c = 0; c < game.cols(); ++c) {
      bool row_best = true, col_best = true;
      for (std::size_t r2 = 0; r2 < game.rows() && row_best; ++r2)
        row_best = game.u1()(r2, c) <= game.u1()(r, c);
      for (std::size_t c2 = 0; c2 < game.cols() && col_best; ++c2)
        col_best = game.u2()(r, c2) <= game.u2()(r, c);
      if (row_best && col_best)
        out.push_back(make_equilibrium(game, MixedStrategy::pure(game.rows(), r),
                                       MixedStrategy::pure(game.cols(), c)));
    }
  }
  return out;
}

std::vector<Equilibrium> support_enumeration(const BimatrixGame& game, Execution exec) {
  check_size(game);
  const detail::ScaledMatrix a = detail::scale_to_integers(game.u1());
  const detail::ScaledMatrix bt = detail::scale_to_integers(game.u2().transposed());
  std::vector<Equilibrium> out;
  for (std::size_t k = 1; k <= std::min(game.rows(), game.cols()); ++k) {
    const auto row_sets = detail::combinations(game.rows(), k);
    const auto col_sets = detail::combinations(game.cols(), k);
    auto found = detail::collect_indexed<Equilibrium>(
        row_sets.size() * col_sets.size(), exec, [&](std::size_t idx) {
          return try_support_pair(a, bt, row_sets[idx / col_sets.size()], col_sets[idx % col_sets.size()]);
        });
    for (auto& [idx, e] : found) out.push_back(std::move(e));
  }
  return out;
}

VertexEnumeration enumerate_vertices(const BimatrixGame& game, Execution exec) {
  check_size(game);
  VertexEnumeration ve;
  ve.row_polytope = polytope_vertices(positive_shift(game.u2()), exec);
  ve.col_polytope = polytope_vertices(positive_shift(game.u1()).transposed(), exec);
  for (const auto& v : ve.row_polytope)
    if (std::popcount(v.zero_mask) + std::popcount(v.tight_mask) != static_cast<int>(game.rows()))
      ve.nondegenerate = false;
  for (const auto& v : ve.col_polytope)
    if (std::popcount(v.zero_mask) + std::popcount(v.tight_mask) != static_cast<int>(game.cols()))
      ve.nondegenerate = false;

  const std::uint64_t rows = all_mask(game.rows());
  const std::uint64_t cols = all_mask(game.cols());
  for (const auto& x : ve.row_polytope) {
    if (x.zero_mask == rows) continue;
    for (const auto& y : ve.col_polytope) {
      if (y.zero_mask == cols) continue;
      if ((x.zero_mask | y.tight_mask) == rows && (x.tight_mask | y.zero_mask) == cols)
        ve.extreme_equilibria.push_back(make_equilibrium(game, normalized(x.z), normalized(y.z)));
    }
  }
  sort_and_dedupe(ve.extreme_equilibria);
  return ve;
}

bool is_nondegenerate(const BimatrixGame& game) { return enumerate_vertices(game).nondegenerate; }

EquilibriumSet enumerate_equilibria(const BimatrixGame& game, Execution exec) {
  EquilibriumSet set{support_enumeration(game, exec), false};
  VertexEnumeration ve = enumerate_vertices(game, exec);
  set.game_degenerate = !ve.nondegenerate ||
                        std::any_of(set.equilibria.begin(), set.equilibria.end(),
                                    [](const Equilibrium& e) { return e.degenerate; });
  if (set.game_degenerate) {
    for (auto& e : ve.extreme_equilibria) set.equilibria.push_back(std::move(e));
    sort_and_dedupe(set.equilibria);
  }
  return set;
}

MaxminResult maxmin(const BimatrixGame& game, Player player) {
  // own actions x opponent actions
  const Matrix u = player == Player::One ? game.u1() : game.u2().transposed();
  const Matrix shifted = positive_shift(u);
  const Rational shift = shifted(0, 0) - u(0, 0);
  const std::size_t own = u.rows();
  const std::size_t opp = u.cols();

  // variables: x_0..x_{own-1}, v.  v - sum_a x_a u'(a, b) <= 0 for each b; sum x <= 1.
  std::vector<std::vector<Rational>> m;
  std::vector<Rational> b;
  for (std::size_t col = 0; col < opp; ++col) {
    std::vector<Rational> row(own + 1);
    for (std::size_t a = 0; a < own; ++a) row[a] = -shifted(a, col);
    row[own] = 1;
    m.push_back(std::move(row));
    b.emplace_back(0);
  }
  std::vector<Rational> simplex_row(own + 1, Rational(1));
  simplex_row[own] = 0;
  m.push_back(std::move(simplex_row));
  b.emplace_back(1);
  std::vector<Rational> c(own + 1);
  c[own] = 1;

  auto sol = linalg::maximize(m, b, c);
  std::vector<Rational> x(sol.x.begin(), sol.x.begin() + static_cast<std::ptrdiff_t>(own));
  return MaxminResult{MixedStrategy(std::move(x)), sol.objective - shift};
}

bool certify_equilibrium(const BimatrixGame& game, const Equilibrium& e) {
  if (e.s1.size() != game.rows() || e.s2.size() != game.cols())
    throw DimensionError("equilibrium strategies do not match game dimensions");
  if (e.s1.support() != e.support1 || e.s2.support() != e.support2) return false;
  auto contained = [](const std::vector<std::size_t>& support, const std::vector<std::size_t>& br) {
    return std::includes(br.begin(), br.end(), support.begin(), support.end());
  };
  if (!contained(e.support1, pure_best_responses(game, Player::One, e.s2).actions)) return false;
  if (!contained(e.support2, pure_best_responses(game, Player::Two, e.s1).actions)) return false;
  return e.payoff1 == expected_payoff(game, e.s1, e.s2, Player::One) &&
         e.payoff2 == expected_payoff(game, e.s1, e.s2, Player::Two);
}

}  // namespace eqc
