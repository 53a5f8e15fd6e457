#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sympack/inner.hpp"

namespace sympack {

// One homogeneous quadratic constraint <Q, xx^T> rel rhs with Q symmetric.
struct QuadConstraint {
  RMat matrix;
  Rel rel = Rel::Ge;
  Rat rhs;
  std::string label;
};

// Homogeneous QCQP over the variable vector listed in var_names; the
// homogenization variable t is always last and t^2 = 1 appears exactly once.
struct QcqpModel {
  int variant = 1;  // 1 binaries, 2 separating hyperplanes, 3 Farkas rows
  int dim = 2;
  int m = 0;
  std::vector<std::string> var_names;
  RMat objective;
  std::vector<QuadConstraint> constraints;

  int num_vars() const { return static_cast<int>(var_names.size()); }
  int t_index() const { return num_vars() - 1; }
};

// Binaries z_i_j_f with z(t-z)=0, quadratic disjointness products, and
// containment rows multiplied by t. Facet counts per pair come from the
// actual Minkowski regions.
QcqpModel build_qcqp1(const InnerInstance& inst);

// Separating-hyperplane variables (normal components and offset gamma) per
// pair with the normalization sum-of-squares = 1 and 2(n+1) vertex-side rows.
QcqpModel build_qcqp2(const InnerInstance& inst);

// Farkas multipliers per pair: one row >= 1 per pairwise vertex difference,
// (n+1)^2 rows per pair.
QcqpModel build_qcqp3(const InnerInstance& inst);

// Moment relaxation: X PSD with <A_i, X> rel b_i; the rank-1 condition is
// dropped and nothing else changes.
struct SdpRelaxation {
  int d = 0;  // moment matrix dimension = number of QCQP variables
  RMat objective;
  std::vector<QuadConstraint> constraints;
};

SdpRelaxation relax_to_sdp(const QcqpModel& q);

// Sparse SDPA output. The moment matrix is a single SDP block; inequality
// constraints carry diagonal slack entries in a second, diagonal block, which
// is how the dual equality form expects them. Values are rounded to 17
// significant digits; entries whose decimal expansion does not terminate are
// repeated exactly in `*EXACT` header comments, which read_sdpa applies
// back. The file encodes max <-C, Y>, so a solver's optimum is the negated
// minimum of the relaxation.
void export_sdpa(const SdpRelaxation& r, std::ostream& os);
SdpRelaxation read_sdpa(std::istream& is);

Rat quad_eval(const RMat& Q, const RVec& v);
bool satisfies(const QuadConstraint& c, const RVec& v);

// Rank-1 certificates: full variable vectors (t = 1) that satisfy every
// constraint of the corresponding model exactly. QCQP 1 lifts any verified
// packing of the instance, in particular the solved optimum. QCQP 2 needs a
// pairwise axis-separated placement (the normalization row forces a rational
// unit normal) and QCQP 3 a placement with pairwise disjoint closures; the
// gapped strip placement satisfies both.
RVec qcqp1_certificate(const QcqpModel& q, const InnerInstance& inst,
                       const Placement& placement);
RVec qcqp2_certificate(const QcqpModel& q, const InnerInstance& inst,
                       const Placement& placement);
RVec qcqp3_certificate(const QcqpModel& q, const InnerInstance& inst,
                       const Placement& placement);

}  // namespace sympack
