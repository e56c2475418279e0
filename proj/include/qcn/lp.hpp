#pragma once

#include <vector>

#include "qcn/rational.hpp"

namespace qcn {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  std::vector<Rational> x;
  Rational objective = 0;
};

/// minimize c·x subject to A x = b, x >= 0, in exact rational arithmetic.
/// Two-phase dense tableau simplex with Bland's rule (lowest-index entering
/// column, lowest-index leaving variable), so results are deterministic.
LpResult solve_lp(const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& b,
                  const std::vector<Rational>& c);

/// Phase one only.
bool lp_feasible(const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& b);

}  // namespace qcn
