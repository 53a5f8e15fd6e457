#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "sympack/rational.hpp"

namespace sympack {

struct InvalidShapeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DegenerateHullError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A unimodular image of the standard n-simplex with one vertex pinned at the
// origin. The columns of `cols` are the n non-origin vertices; the matrix is
// in GL(n,Z), so every shape has volume exactly 1/n!.
struct SimplexShape {
  IMat cols;  // n x n

  int dim() const { return static_cast<int>(cols.rows()); }
  IVec vertex(int i) const;                // i in [0, n], vertex 0 is the origin
  std::vector<IVec> vertices() const;      // n+1 vertices, origin first
  Int det() const;                         // exact, dims 2 and 3 only
};

bool operator==(const SimplexShape& a, const SimplexShape& b);
bool shape_less(const SimplexShape& a, const SimplexShape& b);
std::string shape_key(const SimplexShape& s);  // "a,b;c,d" over columns

// Per-shape reduction of the (n+1)^2 raw containment inequalities to n+1:
//   coord_c(t_i) >= lower[c]          for each coordinate c
//   sum(t_i) - s <= sum_bound
struct ContainmentConstants {
  IVec lower;     // n entries, each >= 0
  Int sum_bound;  // <= 0
};

// Closed halfspace normal.x <= rhs whose interior satisfies normal.x < rhs
// strictly. gcd(normal entries, rhs) = 1 and the normal is nonzero.
struct Facet {
  IVec normal;
  Int rhs;
};

bool operator==(const Facet& a, const Facet& b);

// Minkowski difference T_i (-) T_j. `points` is the full (n+1)^2 list of
// pairwise vertex differences (the V-representation, interior points
// included); `facets` is the H-representation of their convex hull.
struct MinkowskiRegion {
  std::vector<Facet> facets;
  std::vector<IVec> points;

  // Strictly inside every facet, i.e. the translated interiors overlap.
  bool strictly_inside(const RVec& d) const;
};

// One rational translation per shape plus the container side length.
struct Placement {
  Rat s;
  std::vector<RVec> translations;
};

// Unique representative of the translation-and-vertex-relabeling class:
// rebase at the lexicographically smallest vertex (which moves it to the
// origin and makes every other vertex lex-positive), then sort the remaining
// vertices lexicographically. Idempotent and constant on the orbit.
SimplexShape canonicalize(const SimplexShape& shape);

// Minimum side of a standard simplex containing some translate of the shape:
// max over vertices of the coordinate sum minus the sum over coordinates of
// the per-coordinate vertex minima. An integer for lattice shapes.
Int enclosing_side(const SimplexShape& shape);

ContainmentConstants containment_constants(const SimplexShape& shape);

// All canonical shapes with enclosing_side <= sbar, sorted by
// (enclosing_side, lexicographic vertex list). The secondary enumeration
// ranges over integer matrices with entries in [-floor(sbar), floor(sbar)]:
// any admissible shape has a translate inside the closed container, where all
// coordinates lie in [0, sbar], so every rebased vertex difference fits in
// that box. The primary sort key makes shapelists for growing sbar prefixes
// of one another, which keeps shape indices stable across runs.
std::vector<SimplexShape> enumerate_shapelist(int dim, const Rat& sbar);

// Facets of the convex hull of integer points, primitive normals, sorted by
// (normal, rhs). 2D: monotone chain. 3D: incremental insertion with exact
// integer orientation predicates; coplanar triangles merge into one facet.
// Throws DegenerateHullError unless the points affinely span R^dim.
std::vector<Facet> convex_hull(const std::vector<IVec>& points, int dim);

MinkowskiRegion minkowski_difference(const SimplexShape& si,
                                     const SimplexShape& sj);

// Geometric packing check, independent of any solver: every translated closed
// shape lies in the closed container of side s, and for every pair the
// translation difference lies on or outside some facet of the Minkowski
// region (open interiors disjoint; touching is allowed).
bool verify_packing(const std::vector<SimplexShape>& shapes,
                    const Placement& placement);

// Shapelist file: header `dim=<n> sbar=<p>/<q> count=<m>` followed by one
// shape per line, `n;v1;...;vn` with comma-separated integer vectors.
void write_shapelist(std::ostream& os, int dim, const Rat& sbar,
                     const std::vector<SimplexShape>& shapes);

struct ShapelistFile {
  int dim = 0;
  Rat sbar;
  std::vector<SimplexShape> shapes;
};
ShapelistFile read_shapelist(std::istream& is);

}  // namespace sympack
