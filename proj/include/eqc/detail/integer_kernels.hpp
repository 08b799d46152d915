#pragma once

// Fraction-free (Bareiss) elimination over integers. Payoff matrices are
// scaled to integers once per game; every candidate system is then solved
// without gcd work. The int64 instantiation throws Overflow on any
// overflowing operation and callers retry with mpz_class.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "eqc/game.hpp"

namespace eqc::detail {

struct Overflow {};

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline std::int64_t neg(std::int64_t a) { return sub(0, a); }
inline std::int64_t exact_div(std::int64_t a, std::int64_t b) {
  if (b == -1) return neg(a);
  return a / b;
}
inline int sign_of(std::int64_t a) { return (a > 0) - (a < 0); }

inline mpz_class add(const mpz_class& a, const mpz_class& b) { return a + b; }
inline mpz_class sub(const mpz_class& a, const mpz_class& b) { return a - b; }
inline mpz_class mul(const mpz_class& a, const mpz_class& b) { return a * b; }
inline mpz_class neg(const mpz_class& a) { return -a; }
inline mpz_class exact_div(const mpz_class& a, const mpz_class& b) {
  mpz_class r;
  mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}
inline int sign_of(const mpz_class& a) { return sgn(a); }

inline mpz_class to_mpz(std::int64_t v) { return mpz_class(static_cast<long>(v)); }
inline mpz_class to_mpz(const mpz_class& v) { return v; }

/// Row-major integer matrix.
template <class Int>
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Int> data;
  const Int& operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

/// m scaled by the lcm of its denominators: integer entries, positive scale.
struct ScaledMatrix {
  IntMatrix<mpz_class> big;
  std::optional<IntMatrix<std::int64_t>> small;  // when every entry fits
  mpz_class scale;
};

inline ScaledMatrix scale_to_integers(const Matrix& m) {
  ScaledMatrix out;
  out.scale = 1;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out.scale = lcm(out.scale, m(r, c).raw().get_den());
  out.big = IntMatrix<mpz_class>{m.rows(), m.cols(), {}};
  IntMatrix<std::int64_t> small{m.rows(), m.cols(), {}};
  bool fits = true;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      mpz_class v = m(r, c).raw().get_num() * (out.scale / m(r, c).raw().get_den());
      fits = fits && v.fits_sint_p();
      if (fits) small.data.push_back(v.get_si());
      out.big.data.push_back(std::move(v));
    }
  }
  if (fits) out.small = std::move(small);
  return out;
}

/// Solution x_i = numerators[i] / denominator with denominator > 0.
template <class Int>
struct IntSolution {
  std::vector<Int> numerators;
  Int denominator;
};

/// Solves the n x n system held row-major in `a` (n*(n+1) entries, last
/// column is the right-hand side). Returns nullopt when singular.
template <class Int>
std::optional<IntSolution<Int>> bareiss_solve(std::vector<Int> a, std::size_t n) {
  const std::size_t w = n + 1;
  auto at = [&](std::size_t r, std::size_t c) -> Int& { return a[r * w + c]; };
  Int prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && sign_of(at(p, k)) == 0) ++p;
    if (p == n) return std::nullopt;
    if (p != k)
      for (std::size_t c = k; c < w; ++c) std::swap(at(p, c), at(k, c));
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < w; ++j)
        at(i, j) = exact_div(sub(mul(at(i, j), at(k, k)), mul(at(i, k), at(k, j))), prev);
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  IntSolution<Int> sol{std::vector<Int>(n), prev};
  for (std::size_t i = n; i-- > 0;) {
    Int acc = mul(sol.denominator, at(i, n));
    for (std::size_t j = i + 1; j < n; ++j) acc = sub(acc, mul(at(i, j), sol.numerators[j]));
    sol.numerators[i] = exact_div(acc, at(i, i));
  }
  if (sign_of(sol.denominator) < 0) {
    sol.denominator = neg(sol.denominator);
    for (auto& v : sol.numerators) v = neg(v);
  }
  return sol;
}

}  // namespace eqc::detail
