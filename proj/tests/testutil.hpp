#pragma once

#include <random>
#include <set>
#include <vector>

#include "sympack/geometry.hpp"
#include "sympack/inner.hpp"
#include "sympack/ratlp.hpp"

namespace sympack::testutil {

inline SimplexShape make_shape2(Int a, Int b, Int c, Int d) {
  SimplexShape s;
  s.cols.resize(2, 2);
  s.cols << a, c, b, d;  // columns (a,b) and (c,d)
  return s;
}

inline SimplexShape make_shape3(std::array<Int, 3> v1, std::array<Int, 3> v2,
                                std::array<Int, 3> v3) {
  SimplexShape s;
  s.cols.resize(3, 3);
  for (int r = 0; r < 3; ++r) {
    s.cols(r, 0) = v1[static_cast<size_t>(r)];
    s.cols(r, 1) = v2[static_cast<size_t>(r)];
    s.cols(r, 2) = v3[static_cast<size_t>(r)];
  }
  return s;
}

inline SimplexShape std_simplex(int dim) {
  SimplexShape s;
  s.cols = IMat::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) s.cols(i, i) = 1;
  return canonicalize(s);
}

// Random GL(n,Z) element: a product of elementary row operations applied to
// the identity, so the determinant stays +-1 by construction.
inline SimplexShape random_unimodular(int dim, std::mt19937& rng, int ops = 8) {
  IMat m = IMat::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1;
  std::uniform_int_distribution<int> pick(0, dim - 1);
  std::uniform_int_distribution<int> coef(-2, 2);
  std::uniform_int_distribution<int> kind(0, 2);
  for (int t = 0; t < ops; ++t) {
    int i = pick(rng), j = pick(rng);
    switch (kind(rng)) {
      case 0:
        if (i != j) m.row(i) += coef(rng) * m.row(j);
        break;
      case 1:
        if (i != j) m.row(i).swap(m.row(j));
        break;
      default:
        m.row(i) = -m.row(i);
        break;
    }
  }
  SimplexShape s;
  s.cols = m;
  return s;
}

// Independent hull oracle: every supporting halfspace spanned by dim points,
// kept when all points lie on one side. Primitive normals, sorted like
// convex_hull output.
inline std::vector<Facet> brute_hull(const std::vector<IVec>& points, int dim) {
  auto add_if_supporting = [&](IVec normal, std::set<std::pair<std::vector<Int>, Int>>& out,
                               const IVec& base) {
    Int g = 0;
    for (Eigen::Index c = 0; c < normal.size(); ++c)
      g = std::gcd(g, std::abs(normal[c]));
    if (g == 0) return;
    normal /= g;
    Int rhs = normal.dot(base) / 1;
    bool all_le = true, all_ge = true;
    for (const auto& p : points) {
      Int v = normal.dot(p);
      if (v > rhs) all_le = false;
      if (v < rhs) all_ge = false;
    }
    auto key = [&](const IVec& n, Int r) {
      std::vector<Int> kv(n.data(), n.data() + n.size());
      return std::make_pair(kv, r);
    };
    if (all_le && !all_ge) out.insert(key(normal, rhs));
    if (all_ge && !all_le) out.insert(key(-normal, -rhs));
  };
  std::set<std::pair<std::vector<Int>, Int>> planes;
  if (dim == 2) {
    for (size_t a = 0; a < points.size(); ++a)
      for (size_t b = a + 1; b < points.size(); ++b) {
        IVec d = points[b] - points[a];
        IVec n(2);
        n << d[1], -d[0];
        add_if_supporting(n, planes, points[a]);
      }
  } else {
    for (size_t a = 0; a < points.size(); ++a)
      for (size_t b = a + 1; b < points.size(); ++b)
        for (size_t c = b + 1; c < points.size(); ++c) {
          IVec u = points[b] - points[a], v = points[c] - points[a];
          IVec n(3);
          n << u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
              u[0] * v[1] - u[1] * v[0];
          add_if_supporting(n, planes, points[a]);
        }
  }
  std::vector<Facet> out;
  for (const auto& [nv, rhs] : planes) {
    Facet f;
    f.normal = IVec(dim);
    for (int c = 0; c < dim; ++c) f.normal[c] = nv[static_cast<size_t>(c)];
    f.rhs = rhs;
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end(), [](const Facet& a, const Facet& b) {
    if (lex_less(a.normal, b.normal)) return true;
    if (lex_less(b.normal, a.normal)) return false;
    return a.rhs < b.rhs;
  });
  return out;
}

// Independent inner oracle: enumerate every facet assignment over all pairs,
// solve the containment LP plus one assigned row per pair, take the minimum.
struct BruteInner {
  bool feasible = false;
  Rat value;
  Placement placement;
};

inline BruteInner brute_inner(const std::vector<SimplexShape>& shapes_in) {
  std::vector<SimplexShape> shapes;
  for (const auto& s : shapes_in) shapes.push_back(canonicalize(s));
  std::sort(shapes.begin(), shapes.end(), shape_less);
  const int n = shapes.empty() ? 2 : shapes[0].dim();
  const int m = static_cast<int>(shapes.size());

  LinearProgram lp;
  lp.num_vars = 1 + n * m;
  lp.objective = rvec_zero(lp.num_vars);
  lp.objective[0] = Rat(1);
  for (int i = 0; i < m; ++i) {
    ContainmentConstants cc = containment_constants(shapes[static_cast<size_t>(i)]);
    for (int c = 0; c < n; ++c) {
      LinRow row;
      row.coeffs = rvec_zero(lp.num_vars);
      row.coeffs[1 + i * n + c] = Rat(1);
      row.rel = Rel::Ge;
      row.rhs = Rat(cc.lower[c]);
      lp.rows.push_back(std::move(row));
    }
    LinRow sum;
    sum.coeffs = rvec_zero(lp.num_vars);
    for (int c = 0; c < n; ++c) sum.coeffs[1 + i * n + c] = Rat(1);
    sum.coeffs[0] = Rat(-1);
    sum.rel = Rel::Le;
    sum.rhs = Rat(cc.sum_bound);
    lp.rows.push_back(std::move(sum));
  }

  struct Pair {
    int i, j;
    MinkowskiRegion region;
  };
  std::vector<Pair> pairs;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      pairs.push_back({i, j, minkowski_difference(shapes[static_cast<size_t>(i)],
                                                  shapes[static_cast<size_t>(j)])});

  BruteInner best;
  std::vector<size_t> pick(pairs.size(), 0);
  for (;;) {
    LinearProgram instance = lp;
    for (size_t p = 0; p < pairs.size(); ++p) {
      const Facet& f = pairs[p].region.facets[pick[p]];
      LinRow row;
      row.coeffs = rvec_zero(lp.num_vars);
      for (int c = 0; c < n; ++c) {
        row.coeffs[1 + pairs[p].j * n + c] += Rat(f.normal[c]);
        row.coeffs[1 + pairs[p].i * n + c] -= Rat(f.normal[c]);
      }
      row.rel = Rel::Ge;
      row.rhs = Rat(f.rhs);
      instance.rows.push_back(std::move(row));
    }
    LpOutcome out = solve_lp(instance);
    if (out.status == LpStatus::Optimal &&
        (!best.feasible || out.value < best.value)) {
      best.feasible = true;
      best.value = out.value;
      best.placement.s = out.value;
      best.placement.translations.clear();
      for (int i = 0; i < m; ++i) {
        RVec t = rvec_zero(n);
        for (int c = 0; c < n; ++c) t[c] = out.point[1 + i * n + c];
        best.placement.translations.push_back(std::move(t));
      }
    }
    // next assignment
    size_t p = 0;
    while (p < pairs.size()) {
      if (++pick[p] < pairs[p].region.facets.size()) break;
      pick[p] = 0;
      ++p;
    }
    if (p == pairs.size()) break;
    if (pairs.empty()) break;
  }
  if (pairs.empty()) {
    // single LP, no disjointness
    LpOutcome out = solve_lp(lp);
    best.feasible = out.status == LpStatus::Optimal;
    if (best.feasible) {
      best.value = out.value;
      best.placement.s = out.value;
      RVec t = rvec_zero(n);
      for (int c = 0; c < n; ++c) t[c] = out.point[1 + c];
      best.placement.translations = {t};
    }
  }
  return best;
}

// Random small LPs for the kernel property tests.
inline LinearProgram random_lp(std::mt19937& rng) {
  std::uniform_int_distribution<int> nv(1, 4), nr(1, 6), coef(-3, 3),
      den(1, 3), relpick(0, 2);
  LinearProgram lp;
  lp.num_vars = nv(rng);
  lp.objective = rvec_zero(lp.num_vars);
  for (int j = 0; j < lp.num_vars; ++j)
    lp.objective[j] = Rat(coef(rng), den(rng));
  int rows = nr(rng);
  for (int r = 0; r < rows; ++r) {
    LinRow row;
    row.coeffs = rvec_zero(lp.num_vars);
    for (int j = 0; j < lp.num_vars; ++j) row.coeffs[j] = Rat(coef(rng));
    row.rel = static_cast<Rel>(relpick(rng));
    row.rhs = Rat(coef(rng), den(rng));
    lp.rows.push_back(std::move(row));
  }
  // Box rows keep most instances bounded without losing the unbounded and
  // infeasible cases entirely.
  std::uniform_int_distribution<int> boxed(0, 3);
  if (boxed(rng) > 0) {
    for (int j = 0; j < lp.num_vars; ++j) {
      LinRow lo, hi;
      lo.coeffs = rvec_zero(lp.num_vars);
      lo.coeffs[j] = Rat(1);
      lo.rel = Rel::Ge;
      lo.rhs = Rat(-5);
      hi.coeffs = rvec_zero(lp.num_vars);
      hi.coeffs[j] = Rat(1);
      hi.rel = Rel::Le;
      hi.rhs = Rat(5);
      lp.rows.push_back(std::move(lo));
      lp.rows.push_back(std::move(hi));
    }
  }
  return lp;
}

inline bool row_satisfied(const LinRow& row, const RVec& x) {
  Rat lhs(0);
  for (Eigen::Index j = 0; j < row.coeffs.size(); ++j)
    lhs += row.coeffs[j] * x[j];
  switch (row.rel) {
    case Rel::Le:
      return lhs <= row.rhs;
    case Rel::Ge:
      return lhs >= row.rhs;
    case Rel::Eq:
      return lhs == row.rhs;
  }
  return false;
}

}  // namespace sympack::testutil
