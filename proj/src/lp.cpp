#include "qcn/lp.hpp"

#include "qcn/error.hpp"

namespace qcn {

namespace {

class Tableau {
 public:
  // rows: [A | b], cost row kept separately as reduced costs over all columns
  Tableau(std::vector<std::vector<Rational>> rows, std::vector<int> basis, int cols)
      : rows_(std::move(rows)), basis_(std::move(basis)), cols_(cols) {}

  void set_cost(const std::vector<Rational>& c) {
    cost_ = c;
    cost_.resize(cols_ + 1, Rational(0));
    // reduced costs: c - c_B B^{-1} A; rhs entry holds -objective
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      Rational cb = cost_[basis_[r]];
      if (cb == 0) continue;
      for (int j = 0; j <= cols_; ++j) cost_[j] -= cb * rows_[r][j];
    }
  }

  // Returns false when unbounded.
  bool optimize(int usable_cols) {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < usable_cols && enter < 0; ++j)
        if (cost_[j] < 0) enter = j;
      if (enter < 0) return true;
      int leave = -1;
      Rational best;
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (rows_[r][enter] <= 0) continue;
        Rational ratio = rows_[r][cols_] / rows_[r][enter];
        if (leave < 0 || ratio < best || (ratio == best && basis_[r] < basis_[leave])) {
          leave = static_cast<int>(r);
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }

  void pivot(int r, int c) {
    Rational p = rows_[r][c];
    for (auto& x : rows_[r]) x /= p;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (static_cast<int>(i) == r || rows_[i][c] == 0) continue;
      Rational f = rows_[i][c];
      for (int j = 0; j <= cols_; ++j) rows_[i][j] -= f * rows_[r][j];
    }
    if (cost_[c] != 0) {
      Rational f = cost_[c];
      for (int j = 0; j <= cols_; ++j) cost_[j] -= f * rows_[r][j];
    }
    basis_[r] = c;
  }

  Rational objective() const { return -cost_[cols_]; }

  std::vector<std::vector<Rational>>& rows() { return rows_; }
  std::vector<int>& basis() { return basis_; }

  std::vector<Rational> solution(int n) const {
    std::vector<Rational> x(n, Rational(0));
    for (std::size_t r = 0; r < rows_.size(); ++r)
      if (basis_[r] < n) x[basis_[r]] = rows_[r][cols_];
    return x;
  }

 private:
  std::vector<std::vector<Rational>> rows_;
  std::vector<int> basis_;
  int cols_;
  std::vector<Rational> cost_;
};

struct PhaseOne {
  Tableau tableau;
  bool feasible;
};

PhaseOne phase_one(const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& b) {
  const int m = static_cast<int>(A.size());
  const int n = m == 0 ? 0 : static_cast<int>(A[0].size());
  if (static_cast<int>(b.size()) != m) throw Error("lp: row count mismatch");
  const int cols = n + m;  // original + artificial
  std::vector<std::vector<Rational>> rows(m, std::vector<Rational>(cols + 1, Rational(0)));
  std::vector<int> basis(m);
  for (int r = 0; r < m; ++r) {
    if (static_cast<int>(A[r].size()) != n) throw Error("lp: ragged constraint matrix");
    bool flip = b[r] < 0;
    for (int j = 0; j < n; ++j) rows[r][j] = flip ? Rational(-A[r][j]) : A[r][j];
    rows[r][n + r] = 1;
    rows[r][cols] = flip ? Rational(-b[r]) : b[r];
    basis[r] = n + r;
  }
  Tableau t(std::move(rows), std::move(basis), cols);
  std::vector<Rational> c(cols, Rational(0));
  for (int r = 0; r < m; ++r) c[n + r] = 1;
  t.set_cost(c);
  t.optimize(cols);
  bool feasible = t.objective() == 0;
  return {std::move(t), feasible};
}

}  // namespace

bool lp_feasible(const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& b) {
  return phase_one(A, b).feasible;
}

LpResult solve_lp(const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& b,
                  const std::vector<Rational>& c) {
  const int m = static_cast<int>(A.size());
  const int n = static_cast<int>(c.size());
  if (m > 0 && static_cast<int>(A[0].size()) != n) throw Error("lp: cost length mismatch");
  auto [t, feasible] = phase_one(A, b);
  LpResult result;
  if (!feasible) return result;

  // drive artificial variables out of the basis; drop redundant rows
  auto& rows = t.rows();
  auto& basis = t.basis();
  for (int r = 0; r < static_cast<int>(rows.size());) {
    if (basis[r] < n) {
      ++r;
      continue;
    }
    int col = -1;
    for (int j = 0; j < n && col < 0; ++j)
      if (rows[r][j] != 0) col = j;
    if (col >= 0) {
      t.pivot(r, col);
      ++r;
    } else {
      rows.erase(rows.begin() + r);
      basis.erase(basis.begin() + r);
    }
  }
  std::vector<Rational> cost(c);
  cost.resize(n + m, Rational(0));
  t.set_cost(cost);
  if (!t.optimize(n)) {
    result.status = LpStatus::Unbounded;
    return result;
  }
  result.status = LpStatus::Optimal;
  result.x = t.solution(n);
  result.objective = 0;
  for (int j = 0; j < n; ++j) result.objective += c[j] * result.x[j];
  return result;
}

}  // namespace qcn
