#include "sympack/geometry.hpp"

#include <algorithm>
#include <array>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

namespace sympack {

namespace {

Int gcd_int(Int a, Int b) { return std::gcd(std::abs(a), std::abs(b)); }

std::vector<Int> flatten(const std::vector<IVec>& vs) {
  std::vector<Int> out;
  for (const auto& v : vs)
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

}  // namespace

IVec SimplexShape::vertex(int i) const {
  if (i == 0) return IVec::Zero(cols.rows());
  return cols.col(i - 1);
}

std::vector<IVec> SimplexShape::vertices() const {
  std::vector<IVec> vs;
  vs.reserve(dim() + 1);
  for (int i = 0; i <= dim(); ++i) vs.push_back(vertex(i));
  return vs;
}

Int SimplexShape::det() const {
  const IMat& m = cols;
  if (m.rows() == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  if (m.rows() == 3) {
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
           m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
  }
  throw InvalidShapeError("shape determinant: only dims 2 and 3 supported");
}

bool operator==(const SimplexShape& a, const SimplexShape& b) {
  if (a.cols.rows() != b.cols.rows()) return false;
  for (int c = 0; c < a.dim(); ++c)
    if (!ivec_eq(a.cols.col(c), b.cols.col(c))) return false;
  return true;
}

bool shape_less(const SimplexShape& a, const SimplexShape& b) {
  auto fa = flatten(a.vertices());
  auto fb = flatten(b.vertices());
  return fa < fb;
}

std::string shape_key(const SimplexShape& s) {
  std::ostringstream os;
  for (int c = 0; c < s.dim(); ++c) {
    if (c) os << ';';
    for (int r = 0; r < s.dim(); ++r) {
      if (r) os << ',';
      os << s.cols(r, c);
    }
  }
  return os.str();
}

bool operator==(const Facet& a, const Facet& b) {
  return a.rhs == b.rhs && ivec_eq(a.normal, b.normal);
}

bool MinkowskiRegion::strictly_inside(const RVec& d) const {
  for (const auto& f : facets) {
    if (dot(f.normal, d) >= Rat(f.rhs)) return false;
  }
  return true;
}

SimplexShape canonicalize(const SimplexShape& shape) {
  const int n = shape.dim();
  if (n != 2 && n != 3)
    throw InvalidShapeError("canonicalize: only dims 2 and 3 supported");
  Int d = shape.det();
  if (d != 1 && d != -1)
    throw InvalidShapeError("canonicalize: determinant must be +-1, got " +
                            std::to_string(d));
  auto vs = shape.vertices();
  // Rebase at the lexicographically smallest vertex; the remaining vertices
  // are then all lex-positive, so this choice of base is unique.
  int base = 0;
  for (int i = 1; i <= n; ++i)
    if (lex_less(vs[i], vs[base])) base = i;
  std::vector<IVec> rest;
  for (int i = 0; i <= n; ++i) {
    if (i == base) continue;
    rest.push_back(vs[i] - vs[base]);
  }
  std::sort(rest.begin(), rest.end(), lex_less);
  SimplexShape out;
  out.cols.resize(n, n);
  for (int c = 0; c < n; ++c) out.cols.col(c) = rest[c];
  return out;
}

Int enclosing_side(const SimplexShape& shape) {
  const int n = shape.dim();
  Int max_sum = 0;
  IVec min_coord = IVec::Zero(n);
  for (const auto& v : shape.vertices()) {
    Int sum = v.sum();
    max_sum = std::max(max_sum, sum);
    for (int c = 0; c < n; ++c) min_coord[c] = std::min(min_coord[c], v[c]);
  }
  return max_sum - min_coord.sum();
}

ContainmentConstants containment_constants(const SimplexShape& shape) {
  const int n = shape.dim();
  ContainmentConstants cc;
  cc.lower = IVec::Zero(n);
  cc.sum_bound = 0;
  for (const auto& v : shape.vertices()) {
    for (int c = 0; c < n; ++c) cc.lower[c] = std::max(cc.lower[c], -v[c]);
    cc.sum_bound = std::min(cc.sum_bound, -v.sum());
  }
  return cc;
}

std::vector<SimplexShape> enumerate_shapelist(int dim, const Rat& sbar) {
  if (sbar < Rat(1)) return {};
  if (dim != 2 && dim != 3)
    throw InvalidShapeError("enumerate_shapelist: only dims 2 and 3");
  const Int bound = static_cast<Int>(sbar.floor().get_si());
  std::set<std::string> seen;
  std::vector<SimplexShape> out;
  SimplexShape cand;
  cand.cols.resize(dim, dim);
  const Int span = 2 * bound + 1;
  Int total = 1;
  for (int i = 0; i < dim * dim; ++i) total *= span;
  for (Int code = 0; code < total; ++code) {
    Int rem = code;
    for (int c = 0; c < dim; ++c)
      for (int r = 0; r < dim; ++r) {
        cand.cols(r, c) = rem % span - bound;
        rem /= span;
      }
    Int d = cand.det();
    if (d != 1 && d != -1) continue;
    if (Rat(enclosing_side(cand)) > sbar) continue;
    SimplexShape canon = canonicalize(cand);
    if (seen.insert(shape_key(canon)).second) out.push_back(std::move(canon));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    Int ea = enclosing_side(a), eb = enclosing_side(b);
    if (ea != eb) return ea < eb;
    return shape_less(a, b);
  });
  return out;
}

namespace {

// ---- 2D hull: monotone chain over unique sorted points.

Int cross2(const IVec& o, const IVec& a, const IVec& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

std::vector<Facet> hull2(std::vector<IVec> pts) {
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end(), ivec_eq), pts.end());
  const size_t n = pts.size();
  if (n < 3) throw DegenerateHullError("2D hull: need 3 distinct points");
  std::vector<IVec> h(2 * n);
  size_t k = 0;
  for (size_t i = 0; i < n; ++i) {  // lower chain
    while (k >= 2 && cross2(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  size_t lower = k + 1;
  for (size_t i = n - 1; i-- > 0;) {  // upper chain
    while (k >= lower && cross2(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);  // counterclockwise, no repeated endpoint
  if (h.size() < 3) throw DegenerateHullError("2D hull: points are collinear");
  std::vector<Facet> fs;
  for (size_t i = 0; i < h.size(); ++i) {
    const IVec& p = h[i];
    const IVec& q = h[(i + 1) % h.size()];
    Facet f;
    f.normal = IVec(2);
    // Outward normal of a counterclockwise edge.
    f.normal << q[1] - p[1], p[0] - q[0];
    f.rhs = f.normal[0] * p[0] + f.normal[1] * p[1];
    Int g = gcd_int(f.normal[0], f.normal[1]);
    f.normal /= g;
    f.rhs /= g;
    fs.push_back(std::move(f));
  }
  return fs;
}

// ---- 3D hull: incremental insertion with exact orientation predicates.

Int orient3(const IVec& a, const IVec& b, const IVec& c, const IVec& d) {
  IVec u = b - a, v = c - a, w = d - a;
  return u[0] * (v[1] * w[2] - v[2] * w[1]) -
         u[1] * (v[0] * w[2] - v[2] * w[0]) +
         u[2] * (v[0] * w[1] - v[1] * w[0]);
}

struct Tri {
  int a, b, c;
};

std::vector<Facet> hull3(std::vector<IVec> pts) {
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end(), ivec_eq), pts.end());
  const int n = static_cast<int>(pts.size());
  if (n < 4) throw DegenerateHullError("3D hull: need 4 distinct points");

  // Seed simplex: first point, first distinct, first non-collinear, first
  // non-coplanar.
  int i1 = 1;
  int i2 = -1;
  for (int i = 2; i < n; ++i) {
    IVec u = pts[i1] - pts[0], v = pts[i] - pts[0];
    IVec cr(3);
    cr << u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0];
    if (cr[0] != 0 || cr[1] != 0 || cr[2] != 0) {
      i2 = i;
      break;
    }
  }
  if (i2 < 0) throw DegenerateHullError("3D hull: points are collinear");
  int i3 = -1;
  for (int i = 0; i < n; ++i) {
    if (i == 0 || i == i1 || i == i2) continue;
    if (orient3(pts[0], pts[i1], pts[i2], pts[i]) != 0) {
      i3 = i;
      break;
    }
  }
  if (i3 < 0) throw DegenerateHullError("3D hull: points are coplanar");

  // Interior reference: 4x the centroid of the seed simplex. Subsequent hulls
  // contain the seed simplex, so it stays strictly interior throughout.
  IVec c4 = pts[0] + pts[i1] + pts[i2] + pts[i3];
  auto oriented = [&](Tri t) {
    // Flip so the interior reference lies strictly on the negative side.
    IVec u = pts[t.b] - pts[t.a], v = pts[t.c] - pts[t.a];
    IVec nrm(3);
    nrm << u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0];
    Int side = nrm[0] * (c4[0] - 4 * pts[t.a][0]) +
               nrm[1] * (c4[1] - 4 * pts[t.a][1]) +
               nrm[2] * (c4[2] - 4 * pts[t.a][2]);
    if (side > 0) std::swap(t.b, t.c);
    return t;
  };

  std::vector<Tri> faces = {oriented({0, i1, i2}), oriented({0, i1, i3}),
                            oriented({0, i2, i3}), oriented({i1, i2, i3})};

  auto visible = [&](const Tri& t, const IVec& p) {
    return orient3(pts[t.a], pts[t.b], pts[t.c], p) > 0;
  };

  for (int i = 0; i < n; ++i) {
    if (i == 0 || i == i1 || i == i2 || i == i3) continue;
    std::vector<Tri> vis, keep;
    for (const auto& f : faces)
      (visible(f, pts[i]) ? vis : keep).push_back(f);
    if (vis.empty()) continue;
    // Horizon: directed edges of visible faces whose reverse is not visible.
    std::set<std::pair<int, int>> vis_edges;
    for (const auto& f : vis) {
      vis_edges.insert({f.a, f.b});
      vis_edges.insert({f.b, f.c});
      vis_edges.insert({f.c, f.a});
    }
    faces = std::move(keep);
    for (const auto& e : vis_edges) {
      if (vis_edges.count({e.second, e.first})) continue;  // interior edge
      faces.push_back(oriented({e.first, e.second, i}));
    }
  }

  // Merge coplanar triangles: distinct (primitive normal, rhs) pairs.
  std::set<std::pair<std::array<Int, 3>, Int>> planes;
  for (const auto& t : faces) {
    IVec u = pts[t.b] - pts[t.a], v = pts[t.c] - pts[t.a];
    IVec nrm(3);
    nrm << u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0];
    Int g = gcd_int(gcd_int(nrm[0], nrm[1]), nrm[2]);
    nrm /= g;
    Int rhs = nrm.dot(pts[t.a]);
    planes.insert({{nrm[0], nrm[1], nrm[2]}, rhs});
  }
  std::vector<Facet> fs;
  for (const auto& [nr, rhs] : planes) {
    Facet f;
    f.normal = IVec(3);
    f.normal << nr[0], nr[1], nr[2];
    f.rhs = rhs;
    fs.push_back(std::move(f));
  }
  return fs;
}

}  // namespace

std::vector<Facet> convex_hull(const std::vector<IVec>& points, int dim) {
  std::vector<Facet> fs = dim == 2   ? hull2(points)
                          : dim == 3 ? hull3(points)
                                     : throw InvalidShapeError(
                                           "convex_hull: only dims 2 and 3");
  std::sort(fs.begin(), fs.end(), [](const Facet& a, const Facet& b) {
    if (lex_less(a.normal, b.normal)) return true;
    if (lex_less(b.normal, a.normal)) return false;
    return a.rhs < b.rhs;
  });
  return fs;
}

MinkowskiRegion minkowski_difference(const SimplexShape& si,
                                     const SimplexShape& sj) {
  if (si.dim() != sj.dim())
    throw InvalidShapeError("minkowski_difference: dimension mismatch");
  MinkowskiRegion r;
  // Full (n+1)^2 difference list, the second index varying fastest, matching
  // the order the Farkas rows are written in.
  for (const auto& vj : sj.vertices())
    for (const auto& vi : si.vertices()) r.points.push_back(vi - vj);
  r.facets = convex_hull(r.points, si.dim());
  return r;
}

bool verify_packing(const std::vector<SimplexShape>& shapes,
                    const Placement& placement) {
  const size_t m = shapes.size();
  if (placement.translations.size() != m) return false;
  if (m == 0) return false;
  const int n = shapes[0].dim();
  for (size_t i = 0; i < m; ++i) {
    const RVec& t = placement.translations[i];
    if (t.size() != n) return false;
    for (const auto& v : shapes[i].vertices()) {
      Rat sum(0);
      for (int c = 0; c < n; ++c) {
        Rat coord = t[c] + Rat(v[c]);
        if (coord < Rat(0)) return false;
        sum += coord;
      }
      if (sum > placement.s) return false;
    }
  }
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = i + 1; j < m; ++j) {
      MinkowskiRegion region = minkowski_difference(shapes[i], shapes[j]);
      RVec d = placement.translations[j] - placement.translations[i];
      if (region.strictly_inside(d)) return false;
    }
  }
  return true;
}

void write_shapelist(std::ostream& os, int dim, const Rat& sbar,
                     const std::vector<SimplexShape>& shapes) {
  os << "dim=" << dim << " sbar=" << sbar.str() << " count=" << shapes.size()
     << "\n";
  for (const auto& s : shapes) {
    os << dim;
    for (int c = 0; c < dim; ++c) {
      os << ';';
      for (int r = 0; r < dim; ++r) {
        if (r) os << ',';
        os << s.cols(r, c);
      }
    }
    os << "\n";
  }
}

ShapelistFile read_shapelist(std::istream& is) {
  ShapelistFile out;
  std::string header;
  if (!std::getline(is, header))
    throw ParseError("shapelist: missing header line");
  size_t count = 0;
  {
    std::istringstream hs(header);
    std::string tok;
    bool have_dim = false, have_sbar = false, have_count = false;
    while (hs >> tok) {
      auto eq = tok.find('=');
      if (eq == std::string::npos)
        throw ParseError("shapelist: bad header token '" + tok + "'");
      std::string k = tok.substr(0, eq), v = tok.substr(eq + 1);
      if (k == "dim") {
        out.dim = std::stoi(v);
        have_dim = true;
      } else if (k == "sbar") {
        out.sbar = Rat::parse(v);
        have_sbar = true;
      } else if (k == "count") {
        count = std::stoul(v);
        have_count = true;
      } else {
        throw ParseError("shapelist: unknown header key '" + k + "'");
      }
    }
    if (!have_dim || !have_sbar || !have_count)
      throw ParseError("shapelist: header needs dim=, sbar=, count=");
  }
  std::string line;
  size_t lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string field;
    if (!std::getline(ls, field, ';'))
      throw ParseError("shapelist line " + std::to_string(lineno));
    int d = std::stoi(field);
    if (d != out.dim)
      throw ParseError("shapelist line " + std::to_string(lineno) +
                       ": dim mismatch");
    SimplexShape s;
    s.cols.resize(d, d);
    for (int c = 0; c < d; ++c) {
      if (!std::getline(ls, field, ';'))
        throw ParseError("shapelist line " + std::to_string(lineno) +
                         ": missing vector");
      std::istringstream vs(field);
      std::string num;
      for (int r = 0; r < d; ++r) {
        if (!std::getline(vs, num, ','))
          throw ParseError("shapelist line " + std::to_string(lineno) +
                           ": short vector");
        s.cols(r, c) = std::stoll(num);
      }
    }
    out.shapes.push_back(std::move(s));
  }
  if (out.shapes.size() != count)
    throw ParseError("shapelist: count=" + std::to_string(count) +
                     " but parsed " + std::to_string(out.shapes.size()));
  return out;
}

}  // namespace sympack
