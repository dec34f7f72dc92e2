#include "exclusionpoly/linprog.hpp"

#include <algorithm>

#include "exclusionpoly/errors.hpp"

namespace exclusionpoly {

void LinearProgram::require_well_formed() const {
  if (num_vars <= 0) throw StructuralError("linear program needs at least one variable");
  auto check_rows = [&](const std::vector<LinearConstraint>& rows, const char* kind) {
    for (const auto& row : rows)
      if (static_cast<int>(row.coeffs.size()) != num_vars)
        throw StructuralError(std::string("constraint row length mismatch in ") + kind);
  };
  check_rows(equalities, "equalities");
  check_rows(inequalities, "inequalities");
  if (objective && static_cast<int>(objective->size()) != num_vars)
    throw StructuralError("objective length mismatch");
  if (!nonnegative.empty() && static_cast<int>(nonnegative.size()) != num_vars)
    throw StructuralError("sign-restriction vector length mismatch");
}

namespace {

// Dense simplex tableau over exact rationals.
//
// Standard form: free variables are split x = u - v, each inequality gets a
// slack, every row gets an artificial variable forming the phase-one basis.
// Pivoting follows Bland's smallest-index rule throughout, which guarantees
// termination and makes every result deterministic.
class SimplexTableau {
 public:
  explicit SimplexTableau(const LinearProgram& lp) : lp_(lp) {
    lp.require_well_formed();
    n_ = lp.num_vars;
    // column layout per original variable
    col_of_var_.resize(n_);
    neg_col_of_var_.assign(n_, -1);
    int col = 0;
    for (int j = 0; j < n_; ++j) {
      col_of_var_[j] = col++;
      const bool nn = !lp.nonnegative.empty() && lp.nonnegative[j];
      if (!nn) neg_col_of_var_[j] = col++;
    }
    slack_begin_ = col;
    const int num_leq = static_cast<int>(lp.inequalities.size());
    col += num_leq;
    art_begin_ = col;
    m_ = static_cast<int>(lp.equalities.size()) + num_leq;

    rows_.assign(m_, RationalVector());
    row_flip_.assign(m_, false);
    // artificial columns only where a slack cannot start basic: equality
    // rows and inequality rows negated to make the right side nonnegative
    art_col_.assign(m_, -1);
    {
      int r = 0;
      for (size_t i = 0; i < lp.equalities.size(); ++i) art_col_[r++] = col++;
      for (int i = 0; i < num_leq; ++i) {
        if (lp.inequalities[i].rhs.sign() < 0) art_col_[r] = col++;
        ++r;
      }
    }
    cols_ = col;

    for (int i = 0; i < m_; ++i) rows_[i].assign(cols_ + 1, Rational());
    int r = 0;
    for (const auto& c : lp.equalities) fill_row(r++, c, -1);
    for (int i = 0; i < num_leq; ++i) fill_row(r++, lp.inequalities[i], slack_begin_ + i);

    basis_.resize(m_);
    for (int i = 0; i < m_; ++i) {
      if (art_col_[i] >= 0) {
        rows_[i][art_col_[i]] = 1;
        basis_[i] = art_col_[i];
      } else {
        basis_[i] = slack_begin_ + (i - static_cast<int>(lp.equalities.size()));
      }
    }
    row_live_.assign(m_, true);

    // phase-one cost row: minimize sum of artificials; reduce against the
    // initial basis so basic columns have zero reduced cost
    phase1_.assign(cols_ + 1, Rational());
    for (int j = 0; j <= cols_; ++j) {
      Rational s;
      for (int i = 0; i < m_; ++i)
        if (art_col_[i] >= 0) s += rows_[i][j];
      phase1_[j] = -s;
    }
    for (int i = 0; i < m_; ++i)
      if (art_col_[i] >= 0) phase1_[art_col_[i]] = Rational();

    phase2_.assign(cols_ + 1, Rational());
    if (lp.objective) {
      for (int j = 0; j < n_; ++j) {
        phase2_[col_of_var_[j]] = (*lp.objective)[j];
        if (neg_col_of_var_[j] >= 0) phase2_[neg_col_of_var_[j]] = -(*lp.objective)[j];
      }
    }
  }

  // Runs phase one. Returns true when a feasible basis was found.
  bool solve_phase1() {
    run(phase1_, /*allow_artificials=*/true);
    if (!(-phase1_[cols_]).is_zero()) return false;
    drive_out_artificials();
    return true;
  }

  enum class Phase2Status { Optimal, Unbounded };

  Phase2Status solve_phase2() { return run(phase2_, /*allow_artificials=*/false); }

  RationalVector extract_point() const {
    RationalVector x(n_);
    RationalVector col_values(cols_);
    for (int i = 0; i < m_; ++i)
      if (row_live_[i]) col_values[basis_[i]] = rows_[i][cols_];
    for (int j = 0; j < n_; ++j) {
      x[j] = col_values[col_of_var_[j]];
      if (neg_col_of_var_[j] >= 0) x[j] -= col_values[neg_col_of_var_[j]];
    }
    return x;
  }

  Rational objective_value() const { return -phase2_[cols_]; }

  // Infeasibility multipliers recovered from the optimal phase-one tableau:
  // the dual value of row i is read off the reduced cost of its artificial
  // (or slack) column, flipped back through any row negation and negated
  // overall so that leq multipliers come out >= 0.
  FarkasCertificate farkas() const {
    FarkasCertificate cert;
    const int num_eq = static_cast<int>(lp_.equalities.size());
    const int num_leq = static_cast<int>(lp_.inequalities.size());
    cert.eq_multipliers.resize(num_eq);
    cert.leq_multipliers.resize(num_leq);
    for (int i = 0; i < m_; ++i) {
      Rational y = art_col_[i] >= 0 ? Rational(1) - phase1_[art_col_[i]]
                                    : -phase1_[slack_begin_ + (i - num_eq)];
      if (row_flip_[i]) y = -y;
      y = -y;
      if (i < num_eq)
        cert.eq_multipliers[i] = y;
      else
        cert.leq_multipliers[i - num_eq] = y;
    }
    return cert;
  }

 private:
  void fill_row(int r, const LinearConstraint& c, int slack_col) {
    for (int j = 0; j < n_; ++j) {
      rows_[r][col_of_var_[j]] = c.coeffs[j];
      if (neg_col_of_var_[j] >= 0) rows_[r][neg_col_of_var_[j]] = -c.coeffs[j];
    }
    if (slack_col >= 0) rows_[r][slack_col] = 1;
    rows_[r][cols_] = c.rhs;
    if (c.rhs.sign() < 0) {
      for (int j = 0; j <= cols_; ++j) rows_[r][j] = -rows_[r][j];
      row_flip_[r] = true;
    }
  }

  void pivot(int r, int c, RationalVector& cost) {
    const Rational p = rows_[r][c];
    for (int j = 0; j <= cols_; ++j) rows_[r][j] /= p;
    for (int i = 0; i < m_; ++i) {
      if (i == r || !row_live_[i] || rows_[i][c].is_zero()) continue;
      const Rational f = rows_[i][c];
      for (int j = 0; j <= cols_; ++j) rows_[i][j] -= f * rows_[r][j];
    }
    auto reduce_cost_row = [&](RationalVector& cr) {
      if (cr[c].is_zero()) return;
      const Rational f = cr[c];
      for (int j = 0; j <= cols_; ++j) cr[j] -= f * rows_[r][j];
    };
    reduce_cost_row(cost);
    if (&cost != &phase2_) reduce_cost_row(phase2_);
    basis_[r] = c;
  }

  Phase2Status run(RationalVector& cost, bool allow_artificials) {
    for (;;) {
      int enter = -1;
      const int limit = allow_artificials ? cols_ : art_begin_;
      for (int j = 0; j < limit; ++j) {
        if (cost[j].sign() < 0) { enter = j; break; }
      }
      if (enter < 0) return Phase2Status::Optimal;

      int leave = -1;
      Rational best;
      for (int i = 0; i < m_; ++i) {
        if (!row_live_[i] || rows_[i][enter].sign() <= 0) continue;
        Rational ratio = rows_[i][cols_] / rows_[i][enter];
        if (leave < 0 || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return Phase2Status::Unbounded;
      pivot(leave, enter, cost);
    }
  }

  // After a zero-cost phase one, pivot remaining basic artificials out or
  // retire their (redundant) rows entirely.
  void drive_out_artificials() {
    for (int i = 0; i < m_; ++i) {
      if (!row_live_[i] || basis_[i] < art_begin_) continue;
      int c = -1;
      for (int j = 0; j < art_begin_; ++j)
        if (!rows_[i][j].is_zero()) { c = j; break; }
      if (c >= 0)
        pivot(i, c, phase1_);
      else
        row_live_[i] = false;
    }
  }

  const LinearProgram& lp_;
  int n_ = 0, m_ = 0, cols_ = 0;
  int slack_begin_ = 0, art_begin_ = 0;
  std::vector<int> col_of_var_, neg_col_of_var_, art_col_;
  std::vector<RationalVector> rows_;
  std::vector<bool> row_flip_;
  std::vector<int> basis_;
  std::vector<bool> row_live_;
  RationalVector phase1_, phase2_;
};

}  // namespace

FeasibilityResult lp_feasible(const LinearProgram& lp) {
  SimplexTableau t(lp);
  FeasibilityResult result;
  if (t.solve_phase1()) {
    result.feasible = true;
    result.witness = t.extract_point();
  } else {
    result.feasible = false;
    result.certificate = t.farkas();
  }
  return result;
}

OptimizationResult lp_minimize(const LinearProgram& lp) {
  if (!lp.objective) throw StructuralError("lp_minimize requires an objective");
  SimplexTableau t(lp);
  if (!t.solve_phase1()) throw LpInfeasibleError("lp_minimize on infeasible program");
  if (t.solve_phase2() == SimplexTableau::Phase2Status::Unbounded)
    throw LpUnboundedError("lp_minimize on program unbounded below");
  return OptimizationResult{t.objective_value(), t.extract_point()};
}

OptimizationResult lp_maximize(const LinearProgram& lp) {
  if (!lp.objective) throw StructuralError("lp_maximize requires an objective");
  LinearProgram flipped = lp;
  for (auto& c : *flipped.objective) c = -c;
  OptimizationResult r = lp_minimize(flipped);
  r.value = -r.value;
  return r;
}

}  // namespace exclusionpoly
