#include "sympack/ratlp.hpp"

#include <limits>
#include <stdexcept>

namespace sympack {

namespace {

void validate(const LinearProgram& lp) {
  if (lp.num_vars <= 0) throw std::invalid_argument("LP: num_vars must be > 0");
  if (lp.objective.size() != lp.num_vars)
    throw std::invalid_argument("LP: objective length mismatch");
  for (const auto& r : lp.rows)
    if (r.coeffs.size() != lp.num_vars)
      throw std::invalid_argument("LP: row length mismatch");
}

}  // namespace

SimplexTableau::SimplexTableau(const LinearProgram& lp) {
  validate(lp);
  n_orig_ = lp.num_vars;
  const Eigen::Index m = static_cast<Eigen::Index>(lp.rows.size());
  Eigen::Index n_slack = 0;
  for (const auto& r : lp.rows)
    if (r.rel != Rel::Eq) ++n_slack;
  const Eigen::Index n_split = 2 * static_cast<Eigen::Index>(n_orig_);
  const Eigen::Index ncols = n_split + n_slack + 1;  // + rhs

  T_ = rmat_zero(m + 1, ncols);
  artificial_.assign(static_cast<size_t>(ncols - 1), false);
  cost_ = rvec_zero(ncols - 1);
  for (int j = 0; j < n_orig_; ++j) {
    cost_[2 * j] = lp.objective[j];
    cost_[2 * j + 1] = -lp.objective[j];
  }

  Eigen::Index slack = n_split;
  std::vector<Eigen::Index> slack_col(lp.rows.size(),
                                      std::numeric_limits<Eigen::Index>::max());
  for (Eigen::Index i = 0; i < m; ++i) {
    const LinRow& r = lp.rows[static_cast<size_t>(i)];
    for (int j = 0; j < n_orig_; ++j) {
      T_(i, 2 * j) = r.coeffs[j];
      T_(i, 2 * j + 1) = -r.coeffs[j];
    }
    if (r.rel != Rel::Eq) {
      T_(i, slack) = Rat(r.rel == Rel::Le ? 1 : -1);
      slack_col[static_cast<size_t>(i)] = slack;
      ++slack;
    }
    T_(i, rhs_col()) = r.rhs;
    if (T_(i, rhs_col()) < Rat(0)) T_.row(i) = -T_.row(i);
  }

  // Phase-1 basis: the row's slack when it survived with coefficient +1,
  // otherwise a fresh artificial column.
  basis_.assign(static_cast<size_t>(m), -1);
  std::vector<Eigen::Index> needs_artificial;
  for (Eigen::Index i = 0; i < m; ++i) {
    Eigen::Index sc = slack_col[static_cast<size_t>(i)];
    if (sc != std::numeric_limits<Eigen::Index>::max() && T_(i, sc) == Rat(1))
      basis_[static_cast<size_t>(i)] = sc;
    else
      needs_artificial.push_back(i);
  }
  if (!needs_artificial.empty()) {
    const Eigen::Index old_cols = T_.cols();
    const Eigen::Index extra = static_cast<Eigen::Index>(needs_artificial.size());
    T_.conservativeResize(Eigen::NoChange, old_cols + extra);
    // rhs moves to the new last column.
    T_.col(T_.cols() - 1) = T_.col(old_cols - 1);
    for (Eigen::Index j = old_cols - 1; j < T_.cols() - 1; ++j)
      T_.col(j) = rvec_zero(T_.rows());
    artificial_.resize(static_cast<size_t>(T_.cols() - 1), true);
    cost_.conservativeResize(T_.cols() - 1);
    for (Eigen::Index j = old_cols - 1; j < T_.cols() - 1; ++j)
      cost_[j] = Rat(0);
    Eigen::Index a = old_cols - 1;
    for (Eigen::Index i : needs_artificial) {
      T_(i, a) = Rat(1);
      basis_[static_cast<size_t>(i)] = a;
      ++a;
    }
  }
}

void SimplexTableau::pivot(Eigen::Index p, Eigen::Index q) {
  ++pivots_;
  Rat piv = T_(p, q);
  T_.row(p) /= piv;
  for (Eigen::Index r = 0; r < T_.rows(); ++r) {
    if (r == p) continue;
    Rat f = T_(r, q);
    if (!f.is_zero()) T_.row(r) -= f * T_.row(p);
  }
  basis_[static_cast<size_t>(p)] = q;
}

// One primal simplex step under Bland's rule: entering column is the lowest
// index with negative reduced cost, leaving row is the lowest basic index
// among the minimum-ratio rows.
SimplexTableau::Step SimplexTableau::price_and_pivot(bool allow_artificial) {
  const Eigen::Index m = cost_row();
  Eigen::Index enter = -1;
  for (Eigen::Index j = 0; j < rhs_col(); ++j) {
    if (!allow_artificial && artificial_[static_cast<size_t>(j)]) continue;
    if (T_(m, j) < Rat(0)) {
      enter = j;
      break;
    }
  }
  if (enter < 0) return Step::Optimal;
  Eigen::Index leave = -1;
  Rat best_ratio;
  for (Eigen::Index i = 0; i < m; ++i) {
    if (T_(i, enter) > Rat(0)) {
      Rat ratio = T_(i, rhs_col()) / T_(i, enter);
      if (leave < 0 || ratio < best_ratio ||
          (ratio == best_ratio &&
           basis_[static_cast<size_t>(i)] < basis_[static_cast<size_t>(leave)])) {
        leave = i;
        best_ratio = ratio;
      }
    }
  }
  if (leave < 0) return Step::Unbounded;
  pivot(leave, enter);
  return Step::Pivoted;
}

LpStatus SimplexTableau::solve() {
  const Eigen::Index m = cost_row();

  // Phase 1: minimize the sum of artificials (skipped when none).
  bool any_art = false;
  for (size_t i = 0; i < basis_.size(); ++i)
    any_art |= artificial_[static_cast<size_t>(basis_[i])];
  if (any_art) {
    T_.row(m) = rvec_zero(T_.cols()).transpose();
    for (Eigen::Index j = 0; j < rhs_col(); ++j)
      if (artificial_[static_cast<size_t>(j)]) T_(m, j) = Rat(1);
    for (Eigen::Index i = 0; i < m; ++i)
      if (artificial_[static_cast<size_t>(basis_[i])]) T_.row(m) -= T_.row(i);
    for (;;) {
      Step st = price_and_pivot(/*allow_artificial=*/true);
      if (st == Step::Optimal) break;
      if (st == Step::Unbounded)
        throw std::logic_error("phase 1 unbounded");  // cannot happen
    }
    if (objective_value() > Rat(0)) return LpStatus::Infeasible;
    // Drive artificials out of the basis where possible.
    for (Eigen::Index i = 0; i < m; ++i) {
      if (!artificial_[static_cast<size_t>(basis_[i])]) continue;
      for (Eigen::Index j = 0; j < rhs_col(); ++j) {
        if (!artificial_[static_cast<size_t>(j)] && !T_(i, j).is_zero()) {
          pivot(i, j);
          break;
        }
      }
    }
  }

  // Phase 2: install the real costs and reprice.
  T_.row(m) = rvec_zero(T_.cols()).transpose();
  for (Eigen::Index j = 0; j < rhs_col(); ++j) T_(m, j) = cost_[j];
  for (Eigen::Index i = 0; i < m; ++i) {
    Rat cb = cost_[basis_[static_cast<size_t>(i)]];
    if (!cb.is_zero()) T_.row(m) -= cb * T_.row(i);
  }
  for (;;) {
    Step st = price_and_pivot(/*allow_artificial=*/false);
    if (st == Step::Optimal) break;
    if (st == Step::Unbounded) {
      solved_ = false;
      return LpStatus::Unbounded;
    }
  }
  compact_artificials();
  solved_ = true;
  return LpStatus::Optimal;
}

void SimplexTableau::compact_artificials() {
  std::vector<bool> keep(static_cast<size_t>(rhs_col()), true);
  bool any = false;
  std::vector<bool> in_basis(static_cast<size_t>(rhs_col()), false);
  for (auto b : basis_) in_basis[static_cast<size_t>(b)] = true;
  for (Eigen::Index j = 0; j < rhs_col(); ++j) {
    if (artificial_[static_cast<size_t>(j)] && !in_basis[static_cast<size_t>(j)]) {
      keep[static_cast<size_t>(j)] = false;
      any = true;
    }
  }
  if (!any) return;
  std::vector<Eigen::Index> newcol(static_cast<size_t>(rhs_col()), -1);
  Eigen::Index nc = 0;
  for (Eigen::Index j = 0; j < rhs_col(); ++j)
    if (keep[static_cast<size_t>(j)]) newcol[static_cast<size_t>(j)] = nc++;
  RMat t2 = rmat_zero(T_.rows(), nc + 1);
  std::vector<bool> art2(static_cast<size_t>(nc));
  RVec cost2 = rvec_zero(nc);
  for (Eigen::Index j = 0; j < rhs_col(); ++j) {
    Eigen::Index k = newcol[static_cast<size_t>(j)];
    if (k < 0) continue;
    t2.col(k) = T_.col(j);
    art2[static_cast<size_t>(k)] = artificial_[static_cast<size_t>(j)];
    cost2[k] = cost_[j];
  }
  t2.col(nc) = T_.col(rhs_col());
  for (auto& b : basis_) b = newcol[static_cast<size_t>(b)];
  T_ = std::move(t2);
  artificial_ = std::move(art2);
  cost_ = std::move(cost2);
}

void SimplexTableau::append_normalized_row(const LinRow& row) {
  // Normalize to `a.x + slack = b` with slack >= 0 basic in the new row.
  RVec a = row.coeffs;
  Rat b = row.rhs;
  if (row.rel == Rel::Ge) {
    a = -a;
    b = -b;
  }
  const Eigen::Index old_cols = T_.cols();
  const Eigen::Index old_rows = T_.rows();
  T_.conservativeResize(old_rows + 1, old_cols + 1);
  // rhs moves right by one; new slack column takes its place.
  T_.col(T_.cols() - 1) = T_.col(old_cols - 1);
  T_.col(old_cols - 1) = rvec_zero(T_.rows());
  // cost row moves down by one; the new constraint row takes its place.
  T_.row(T_.rows() - 1) = T_.row(old_rows - 1);
  artificial_.push_back(false);
  cost_.conservativeResize(cost_.size() + 1);
  cost_[cost_.size() - 1] = Rat(0);

  const Eigen::Index r = old_rows - 1;  // new constraint row index
  T_.row(r) = rvec_zero(T_.cols()).transpose();
  for (int j = 0; j < n_orig_; ++j) {
    T_(r, 2 * j) = a[j];
    T_(r, 2 * j + 1) = -a[j];
  }
  T_(r, old_cols - 1) = Rat(1);  // new slack
  T_(r, rhs_col()) = b;
  // Express in the current basis.
  for (Eigen::Index i = 0; i < r; ++i) {
    Rat f = T_(r, basis_[static_cast<size_t>(i)]);
    if (!f.is_zero()) T_.row(r) -= f * T_.row(i);
  }
  basis_.push_back(old_cols - 1);
}

// Dual simplex: Bland-style rule (leaving row with the smallest basic index
// among infeasible rows; entering column with the smallest index among the
// minimum dual ratios).
LpStatus SimplexTableau::dual_reoptimize() {
  const Eigen::Index m = cost_row();
  for (;;) {
    Eigen::Index leave = -1;
    for (Eigen::Index i = 0; i < m; ++i) {
      if (T_(i, rhs_col()) < Rat(0)) {
        if (leave < 0 ||
            basis_[static_cast<size_t>(i)] < basis_[static_cast<size_t>(leave)])
          leave = i;
      }
    }
    if (leave < 0) return LpStatus::Optimal;
    Eigen::Index enter = -1;
    Rat best_ratio;
    for (Eigen::Index j = 0; j < rhs_col(); ++j) {
      if (artificial_[static_cast<size_t>(j)]) continue;
      if (T_(leave, j) < Rat(0)) {
        Rat ratio = T_(m, j) / -T_(leave, j);
        if (enter < 0 || ratio < best_ratio) {
          enter = j;
          best_ratio = ratio;
        }
      }
    }
    if (enter < 0) return LpStatus::Infeasible;
    pivot(leave, enter);
  }
}

LpStatus SimplexTableau::add_row_reoptimize(const LinRow& row) {
  if (!solved_) throw std::logic_error("add_row_reoptimize before solve");
  if (row.coeffs.size() != n_orig_)
    throw std::invalid_argument("add_row_reoptimize: row length mismatch");
  if (row.rel == Rel::Eq) {
    LinRow le{row.coeffs, Rel::Le, row.rhs};
    LinRow ge{row.coeffs, Rel::Ge, row.rhs};
    LpStatus st = add_row_reoptimize(le);
    if (st != LpStatus::Optimal) return st;
    return add_row_reoptimize(ge);
  }
  append_normalized_row(row);
  LpStatus st = dual_reoptimize();
  if (st != LpStatus::Optimal) solved_ = false;
  return st;
}

RVec SimplexTableau::point() const {
  RVec split = rvec_zero(rhs_col());
  for (size_t i = 0; i < basis_.size(); ++i)
    split[basis_[i]] = T_(static_cast<Eigen::Index>(i), rhs_col());
  RVec x = rvec_zero(n_orig_);
  for (int j = 0; j < n_orig_; ++j) x[j] = split[2 * j] - split[2 * j + 1];
  return x;
}

LpOutcome solve_lp(const LinearProgram& lp) {
  SimplexTableau t(lp);
  LpOutcome out;
  out.status = t.solve();
  if (out.status == LpStatus::Optimal) {
    out.value = t.objective_value();
    out.point = t.point();
  }
  return out;
}

LpOutcome solve_lp_incremental(const LinearProgram& base,
                               const std::vector<LinRow>& extra_rows) {
  LinearProgram lp = base;
  lp.rows.insert(lp.rows.end(), extra_rows.begin(), extra_rows.end());
  return solve_lp(lp);
}

}  // namespace sympack
