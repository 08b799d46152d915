#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "eqc/rational.hpp"

namespace eqc::linalg {

/// Row-major dense square system, small enough to copy freely.
struct SquareSystem {
  std::size_t n = 0;
  std::vector<Rational> a;    // n*n coefficients
  std::vector<Rational> rhs;  // n entries

  explicit SquareSystem(std::size_t size) : n(size), a(size * size), rhs(size) {}
  Rational& at(std::size_t r, std::size_t c) { return a[r * n + c]; }
};

/// Exact Gaussian elimination. Returns nullopt when the system is singular.
std::optional<std::vector<Rational>> solve(SquareSystem sys);

class UnboundedLp : public std::runtime_error {
 public:
  UnboundedLp() : std::runtime_error("linear program is unbounded") {}
};

struct LpSolution {
  std::vector<Rational> x;
  Rational objective;
};

/// Maximizes c.x subject to M x <= b, x >= 0 with b >= 0 (the origin is
/// feasible). Exact tableau simplex; Bland's rule picks entering and leaving
/// variables, so it terminates on degenerate problems.
LpSolution maximize(const std::vector<std::vector<Rational>>& m, const std::vector<Rational>& b,
                    const std::vector<Rational>& c);

}  // namespace eqc::linalg
