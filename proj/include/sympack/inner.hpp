#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sympack/geometry.hpp"
#include "sympack/ratlp.hpp"

namespace sympack {

// One inner optimization instance: a fixed shape multiset, an optional cutoff
// (the current global upper bound), and a symmetry-breaking type. Shapes must
// be sorted canonically so identical shapes are adjacent; `normalized` sorts.
struct InnerInstance {
  int dim = 2;
  std::vector<SimplexShape> shapes;
  std::optional<Rat> cutoff;
  int symmetry_type = 2;  // 0 none, 1 first-coordinate, 2 coordinate-sum

  InnerInstance normalized() const;
};

enum class InnerStatus { Optimal, CutoffExceeded, InfeasibleByCutoff };

struct InnerStats {
  std::int64_t nodes = 0;
  std::int64_t lp_calls = 0;
  double seconds = 0.0;
};

struct InnerResult {
  InnerStatus status = InnerStatus::InfeasibleByCutoff;
  // Optimal: the exact minimum side. CutoffExceeded: a certified lower bound
  // (the smallest LP bound among cutoff-pruned nodes), strictly above cutoff.
  Rat value;
  Placement placement;  // meaningful only when Optimal
  InnerStats stats;
};

// Exact minimum container side for the multiset, by branch-and-bound on the
// disjunction "the translation difference violates at least one Minkowski
// facet". Node LP = containment + symmetry + assigned facet rows; a node
// whose LP point leaves some pair strictly inside its region branches on
// every facet of the most interior such pair. Prunes strictly above the
// cutoff, so ties with the cutoff are kept.
InnerResult solve_inner(const InnerInstance& inst);

// Symmetry-breaking rows over the variables [s, coords...]: one row per
// adjacent identical pair. Type 1 orders the first coordinates, type 2 the
// coordinate sums, type 0 emits nothing. Rows only ever bind identical
// shapes; the optimal value is unchanged by any type.
std::vector<LinRow> symmetry_rows(const InnerInstance& inst);

// Big-M constant (sum |normal components|) * shat + rhs for one facet row.
Rat big_m_value(const Facet& facet, const Rat& shat);

// A side-by-side placement along the first axis; always feasible, so its
// side (the sum of the enclosing sides, plus `gap` between consecutive
// shapes) is a valid upper bound for the instance.
Placement strip_placement(const std::vector<SimplexShape>& shapes,
                          const Rat& gap = Rat(0));

// The full mixed-integer program: minimize s over containment rows, one
// at-least-one row per pair, and one Big-M row per (pair, facet). Variables:
// s, then per-shape coordinates, then binaries z_i_j_f. The facet count per
// pair comes from the actual Minkowski region (6 for generic 2D pairs).
struct BigMModel {
  int dim = 2;
  int m = 0;
  std::vector<std::string> var_names;
  RVec objective;
  std::vector<LinRow> rows;
  std::vector<int> binary_vars;  // indices into var_names
  Rat shat;                      // carried as a bound on s, not a row

  int num_vars() const { return static_cast<int>(var_names.size()); }
  int num_continuous() const { return num_vars() - (int)binary_vars.size(); }
};

BigMModel build_bigm_milp(const InnerInstance& inst, const Rat& shat);

// Human-readable LP text format, deterministic layout. Coefficients whose
// denominator is not a power of 2 and 5 are rounded to 17 significant digits
// in place and carried exactly in `\ exact ...` header comments, which the
// reader below applies back.
void export_lp_file(const BigMModel& model, std::ostream& os);
BigMModel read_lp_file(std::istream& is);

}  // namespace sympack
