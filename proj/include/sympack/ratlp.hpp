#pragma once

#include <string>
#include <vector>

#include "sympack/rational.hpp"

namespace sympack {

enum class Rel { Le, Ge, Eq };

struct LinRow {
  RVec coeffs;
  Rel rel = Rel::Le;
  Rat rhs;
};

// Minimization LP over free variables. There are no implicit variable bounds;
// bounds are ordinary rows.
struct LinearProgram {
  int num_vars = 0;
  RVec objective;
  std::vector<LinRow> rows;
  std::vector<std::string> var_names;  // optional, for export
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpOutcome {
  LpStatus status = LpStatus::Infeasible;
  Rat value;
  RVec point;
};

// Two-phase primal simplex over exact rationals with Bland's anti-cycling
// rule. Deterministic: identical inputs give identical outcomes.
LpOutcome solve_lp(const LinearProgram& lp);

// Same outcome as solve_lp on the concatenated program.
LpOutcome solve_lp_incremental(const LinearProgram& base,
                               const std::vector<LinRow>& extra_rows);

// Dense exact tableau with row-append reoptimization (dual simplex). This is
// the engine under solve_lp and under the disjunctive search, where each
// branch-and-bound child adds one row to its parent. Copy the tableau to
// snapshot a node. After add_row_reoptimize returns Infeasible the tableau is
// spent and must be discarded.
class SimplexTableau {
public:
  explicit SimplexTableau(const LinearProgram& lp);

  LpStatus solve();
  LpStatus add_row_reoptimize(const LinRow& row);

  Rat objective_value() const { return -T_(cost_row(), rhs_col()); }
  RVec point() const;
  std::int64_t pivots() const { return pivots_; }

private:
  Eigen::Index cost_row() const { return T_.rows() - 1; }
  Eigen::Index rhs_col() const { return T_.cols() - 1; }

  enum class Step { Pivoted, Optimal, Unbounded };

  void pivot(Eigen::Index p, Eigen::Index q);
  Step price_and_pivot(bool allow_artificial);
  LpStatus dual_reoptimize();
  void append_normalized_row(const LinRow& row);
  void compact_artificials();

  int n_orig_ = 0;
  RMat T_;  // constraint rows plus one cost row; last column is the rhs
  std::vector<Eigen::Index> basis_;
  std::vector<bool> artificial_;
  RVec cost_;  // phase-2 cost per column
  bool solved_ = false;
  std::int64_t pivots_ = 0;
};

}  // namespace sympack
