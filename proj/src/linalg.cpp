#include "eqc/linalg.hpp"

#include <utility>

namespace eqc::linalg {

std::optional<std::vector<Rational>> solve(SquareSystem sys) {
  const std::size_t n = sys.n;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sys.at(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col) {
      for (std::size_t k = col; k < n; ++k) std::swap(sys.at(pivot, k), sys.at(col, k));
      std::swap(sys.rhs[pivot], sys.rhs[col]);
    }
    const Rational inv = Rational(1) / sys.at(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (sys.at(r, col).is_zero()) continue;
      const Rational f = sys.at(r, col) * inv;
      for (std::size_t k = col + 1; k < n; ++k) sys.at(r, k) -= f * sys.at(col, k);
      sys.rhs[r] -= f * sys.rhs[col];
      sys.at(r, col) = 0;
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational acc = sys.rhs[i];
    for (std::size_t k = i + 1; k < n; ++k) acc -= sys.at(i, k) * x[k];
    x[i] = acc / sys.at(i, i);
  }
  return x;
}

LpSolution maximize(const std::vector<std::vector<Rational>>& m, const std::vector<Rational>& b,
                    const std::vector<Rational>& c) {
  const std::size_t rows = m.size();
  const std::size_t vars = c.size();
  const std::size_t width = vars + rows;  // structural + slack columns

  // tableau[r] = coefficients over all columns, rhs kept separately
  std::vector<std::vector<Rational>> t(rows, std::vector<Rational>(width));
  std::vector<Rational> rhs(b);
  std::vector<std::size_t> basis(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    if (m[r].size() != vars) throw std::invalid_argument("constraint row width mismatch");
    if (rhs[r].sign() < 0) throw std::invalid_argument("origin must be feasible (b >= 0)");
    for (std::size_t k = 0; k < vars; ++k) t[r][k] = m[r][k];
    t[r][vars + r] = 1;
    basis[r] = vars + r;
  }
  // reduced costs: objective row holds c_j - z_j
  std::vector<Rational> reduced(width);
  for (std::size_t k = 0; k < vars; ++k) reduced[k] = c[k];
  Rational objective;

  for (;;) {
    std::size_t enter = width;
    for (std::size_t k = 0; k < width; ++k)
      if (reduced[k].sign() > 0) {
        enter = k;
        break;
      }
    if (enter == width) break;

    std::size_t leave = rows;
    Rational best_ratio;
    for (std::size_t r = 0; r < rows; ++r) {
      if (t[r][enter].sign() <= 0) continue;
      Rational ratio = rhs[r] / t[r][enter];
      if (leave == rows || ratio < best_ratio || (ratio == best_ratio && basis[r] < basis[leave])) {
        leave = r;
        best_ratio = ratio;
      }
    }
    if (leave == rows) throw UnboundedLp();

    const Rational inv = Rational(1) / t[leave][enter];
    for (auto& v : t[leave]) v *= inv;
    rhs[leave] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == leave || t[r][enter].is_zero()) continue;
      const Rational f = t[r][enter];
      for (std::size_t k = 0; k < width; ++k)
        if (!t[leave][k].is_zero()) t[r][k] -= f * t[leave][k];
      rhs[r] -= f * rhs[leave];
    }
    const Rational f = reduced[enter];
    for (std::size_t k = 0; k < width; ++k)
      if (!t[leave][k].is_zero()) reduced[k] -= f * t[leave][k];
    objective += f * rhs[leave];
    basis[leave] = enter;
  }

  LpSolution sol{std::vector<Rational>(vars), objective};
  for (std::size_t r = 0; r < rows; ++r)
    if (basis[r] < vars) sol.x[basis[r]] = rhs[r];
  return sol;
}

}  // namespace eqc::linalg
