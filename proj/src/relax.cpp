#include "sympack/relax.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace sympack {

namespace {

constexpr const char* kCoordLetters[3] = {"x", "y", "z"};
constexpr const char* kNormalLetters[3] = {"alpha", "beta", "eta"};

int coord_var(int shape, int coord, int dim) { return 1 + shape * dim + coord; }

void sym_add(RMat& Q, int i, int j, const Rat& v) {
  if (i == j) {
    Q(i, i) += v;
  } else {
    Rat half = v / Rat(2);
    Q(i, j) += half;
    Q(j, i) += half;
  }
}

struct PairInfo {
  int i, j;
  MinkowskiRegion region;
};

std::vector<PairInfo> pair_regions(const std::vector<SimplexShape>& shapes) {
  std::vector<PairInfo> ps;
  const int m = static_cast<int>(shapes.size());
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      ps.push_back({i, j, minkowski_difference(shapes[i], shapes[j])});
  return ps;
}

std::string pair_suffix(const PairInfo& p) {
  return "_" + std::to_string(p.i + 1) + "_" + std::to_string(p.j + 1);
}

// Containment rows homogenized by t, shared by all three variants.
void add_containment(QcqpModel& q, const InnerInstance& inst) {
  const int n = inst.dim;
  const int m = static_cast<int>(inst.shapes.size());
  const int nv = q.num_vars();
  const int t = q.t_index();
  std::vector<ContainmentConstants> ccs;
  for (const auto& s : inst.shapes) ccs.push_back(containment_constants(s));
  for (int c = 0; c < n; ++c) {
    for (int i = 0; i < m; ++i) {
      QuadConstraint qc;
      qc.matrix = rmat_zero(nv, nv);
      sym_add(qc.matrix, t, coord_var(i, c, n), Rat(1));
      qc.rel = Rel::Ge;
      qc.rhs = Rat(ccs[static_cast<size_t>(i)].lower[c]);
      qc.label = std::string("contain_") + kCoordLetters[c] + "_" +
                 std::to_string(i + 1);
      q.constraints.push_back(std::move(qc));
    }
  }
  for (int i = 0; i < m; ++i) {
    QuadConstraint qc;
    qc.matrix = rmat_zero(nv, nv);
    for (int c = 0; c < n; ++c)
      sym_add(qc.matrix, t, coord_var(i, c, n), Rat(1));
    sym_add(qc.matrix, t, 0, Rat(-1));
    qc.rel = Rel::Le;
    qc.rhs = Rat(ccs[static_cast<size_t>(i)].sum_bound);
    qc.label = "contain_sum_" + std::to_string(i + 1);
    q.constraints.push_back(std::move(qc));
  }
}

void add_homogenization(QcqpModel& q) {
  QuadConstraint qc;
  qc.matrix = rmat_zero(q.num_vars(), q.num_vars());
  qc.matrix(q.t_index(), q.t_index()) = Rat(1);
  qc.rel = Rel::Eq;
  qc.rhs = Rat(1);
  qc.label = "t_squared";
  q.constraints.push_back(std::move(qc));
}

// min s homogenized as the quadratic form s*t.
RMat st_objective(int nv, int t) {
  RMat C = rmat_zero(nv, nv);
  C(0, t) = Rat(1, 2);
  C(t, 0) = Rat(1, 2);
  return C;
}

}  // namespace

QcqpModel build_qcqp1(const InnerInstance& inst_in) {
  InnerInstance inst = inst_in.normalized();
  const int n = inst.dim;
  const int m = static_cast<int>(inst.shapes.size());
  auto pairs = pair_regions(inst.shapes);

  QcqpModel q;
  q.variant = 1;
  q.dim = n;
  q.m = m;
  q.var_names.push_back("s");
  for (int i = 0; i < m; ++i)
    for (int c = 0; c < n; ++c)
      q.var_names.push_back(std::string(kCoordLetters[c]) + "_" +
                            std::to_string(i + 1));
  std::vector<int> z_base;
  for (const auto& p : pairs) {
    z_base.push_back(q.num_vars());
    for (size_t f = 0; f < p.region.facets.size(); ++f)
      q.var_names.push_back("z" + pair_suffix(p) + "_" + std::to_string(f + 1));
  }
  q.var_names.push_back("t");
  const int nv = q.num_vars();
  const int t = q.t_index();

  q.objective = rmat_zero(nv, nv);
  sym_add(q.objective, t, 0, Rat(1));  // minimize t*s

  add_containment(q, inst);
  for (size_t p = 0; p < pairs.size(); ++p) {
    QuadConstraint qc;
    qc.matrix = rmat_zero(nv, nv);
    for (size_t f = 0; f < pairs[p].region.facets.size(); ++f)
      sym_add(qc.matrix, t, z_base[p] + static_cast<int>(f), Rat(1));
    qc.rel = Rel::Ge;
    qc.rhs = Rat(1);
    qc.label = "one_of" + pair_suffix(pairs[p]);
    q.constraints.push_back(std::move(qc));
  }
  for (size_t p = 0; p < pairs.size(); ++p) {
    const auto& pr = pairs[p];
    for (size_t f = 0; f < pr.region.facets.size(); ++f) {
      const Facet& fc = pr.region.facets[f];
      int zv = z_base[p] + static_cast<int>(f);
      QuadConstraint qc;
      qc.matrix = rmat_zero(nv, nv);
      for (int c = 0; c < n; ++c) {
        sym_add(qc.matrix, zv, coord_var(pr.j, c, n), Rat(fc.normal[c]));
        sym_add(qc.matrix, zv, coord_var(pr.i, c, n), Rat(-fc.normal[c]));
      }
      sym_add(qc.matrix, zv, t, Rat(-fc.rhs));
      qc.rel = Rel::Ge;
      qc.rhs = Rat(0);
      qc.label = "disjoint" + pair_suffix(pr) + "_" + std::to_string(f + 1);
      q.constraints.push_back(std::move(qc));
    }
  }
  for (size_t p = 0; p < pairs.size(); ++p) {
    const auto& pr = pairs[p];
    for (size_t f = 0; f < pr.region.facets.size(); ++f) {
      int zv = z_base[p] + static_cast<int>(f);
      QuadConstraint qc;
      qc.matrix = rmat_zero(nv, nv);
      sym_add(qc.matrix, zv, t, Rat(1));
      sym_add(qc.matrix, zv, zv, Rat(-1));
      qc.rel = Rel::Eq;
      qc.rhs = Rat(0);
      qc.label = "binary" + pair_suffix(pr) + "_" + std::to_string(f + 1);
      q.constraints.push_back(std::move(qc));
    }
  }
  add_homogenization(q);
  return q;
}

QcqpModel build_qcqp2(const InnerInstance& inst_in) {
  InnerInstance inst = inst_in.normalized();
  const int n = inst.dim;
  const int m = static_cast<int>(inst.shapes.size());
  auto pairs = pair_regions(inst.shapes);

  QcqpModel q;
  q.variant = 2;
  q.dim = n;
  q.m = m;
  q.var_names.push_back("s");
  for (int i = 0; i < m; ++i)
    for (int c = 0; c < n; ++c)
      q.var_names.push_back(std::string(kCoordLetters[c]) + "_" +
                            std::to_string(i + 1));
  std::vector<int> plane_base;
  for (const auto& p : pairs) {
    plane_base.push_back(q.num_vars());
    for (int c = 0; c < n; ++c)
      q.var_names.push_back(std::string(kNormalLetters[c]) + pair_suffix(p));
    q.var_names.push_back("gamma" + pair_suffix(p));
  }
  q.var_names.push_back("t");
  const int nv = q.num_vars();
  const int t = q.t_index();
  q.objective = st_objective(nv, t);

  add_containment(q, inst);
  for (size_t p = 0; p < pairs.size(); ++p) {
    const auto& pr = pairs[p];
    const int nb = plane_base[p];
    const int gv = nb + n;  // gamma
    {
      QuadConstraint qc;
      qc.matrix = rmat_zero(nv, nv);
      for (int c = 0; c < n; ++c) sym_add(qc.matrix, nb + c, nb + c, Rat(1));
      qc.rel = Rel::Eq;
      qc.rhs = Rat(1);
      qc.label = "unit_normal" + pair_suffix(pr);
      q.constraints.push_back(std::move(qc));
    }
    // Vertex rows: the i-side lies at or below the plane, the j-side at or
    // above, each vertex of each closed triangle in turn.
    for (int side = 0; side < 2; ++side) {
      int shape = side == 0 ? pr.i : pr.j;
      Rel rel = side == 0 ? Rel::Le : Rel::Ge;
      const auto verts = inst.shapes[static_cast<size_t>(shape)].vertices();
      for (size_t vi = 0; vi < verts.size(); ++vi) {
        QuadConstraint qc;
        qc.matrix = rmat_zero(nv, nv);
        for (int c = 0; c < n; ++c) {
          sym_add(qc.matrix, nb + c, coord_var(shape, c, n), Rat(1));
          if (verts[vi][c] != 0)
            sym_add(qc.matrix, nb + c, t, Rat(verts[vi][c]));
        }
        sym_add(qc.matrix, gv, t, Rat(-1));
        qc.rel = rel;
        qc.rhs = Rat(0);
        qc.label = std::string("separate") + pair_suffix(pr) + "_" +
                   (side == 0 ? "i" : "j") + std::to_string(vi);
        q.constraints.push_back(std::move(qc));
      }
    }
  }
  add_homogenization(q);
  return q;
}

QcqpModel build_qcqp3(const InnerInstance& inst_in) {
  InnerInstance inst = inst_in.normalized();
  const int n = inst.dim;
  const int m = static_cast<int>(inst.shapes.size());
  auto pairs = pair_regions(inst.shapes);

  QcqpModel q;
  q.variant = 3;
  q.dim = n;
  q.m = m;
  q.var_names.push_back("s");
  for (int i = 0; i < m; ++i)
    for (int c = 0; c < n; ++c)
      q.var_names.push_back(std::string(kCoordLetters[c]) + "_" +
                            std::to_string(i + 1));
  std::vector<int> mult_base;
  for (const auto& p : pairs) {
    mult_base.push_back(q.num_vars());
    for (int c = 0; c < n; ++c)
      q.var_names.push_back(std::string(kNormalLetters[c]) + pair_suffix(p));
  }
  q.var_names.push_back("t");
  const int nv = q.num_vars();
  const int t = q.t_index();
  q.objective = st_objective(nv, t);

  add_containment(q, inst);
  // One row per pairwise vertex difference w: mult . (t w - (t_j - t_i)) >= 1.
  for (size_t p = 0; p < pairs.size(); ++p) {
    const auto& pr = pairs[p];
    const int nb = mult_base[p];
    for (size_t wi = 0; wi < pr.region.points.size(); ++wi) {
      const IVec& w = pr.region.points[wi];
      QuadConstraint qc;
      qc.matrix = rmat_zero(nv, nv);
      for (int c = 0; c < n; ++c) {
        if (w[c] != 0) sym_add(qc.matrix, nb + c, t, Rat(w[c]));
        sym_add(qc.matrix, nb + c, coord_var(pr.j, c, n), Rat(-1));
        sym_add(qc.matrix, nb + c, coord_var(pr.i, c, n), Rat(1));
      }
      qc.rel = Rel::Ge;
      qc.rhs = Rat(1);
      qc.label = "farkas" + pair_suffix(pr) + "_" + std::to_string(wi + 1);
      q.constraints.push_back(std::move(qc));
    }
  }
  add_homogenization(q);
  return q;
}

SdpRelaxation relax_to_sdp(const QcqpModel& q) {
  SdpRelaxation r;
  r.d = q.num_vars();
  r.objective = q.objective;
  for (const auto& c : q.constraints) {
    if (c.matrix.rows() != r.d || c.matrix.cols() != r.d)
      throw std::logic_error("relax_to_sdp: constraint dimension mismatch");
    for (Eigen::Index i = 0; i < c.matrix.rows(); ++i)
      for (Eigen::Index j = i + 1; j < c.matrix.cols(); ++j)
        if (!(c.matrix(i, j) == c.matrix(j, i)))
          throw std::logic_error(
              "relax_to_sdp: builder bug, non-symmetric constraint " + c.label);
    r.constraints.push_back(c);
  }
  return r;
}

Rat quad_eval(const RMat& Q, const RVec& v) {
  Rat acc(0);
  for (Eigen::Index i = 0; i < Q.rows(); ++i) {
    if (v[i].is_zero()) continue;
    for (Eigen::Index j = 0; j < Q.cols(); ++j) {
      if (Q(i, j).is_zero() || v[j].is_zero()) continue;
      acc += v[i] * Q(i, j) * v[j];
    }
  }
  return acc;
}

bool satisfies(const QuadConstraint& c, const RVec& v) {
  Rat val = quad_eval(c.matrix, v);
  switch (c.rel) {
    case Rel::Le:
      return val <= c.rhs;
    case Rel::Ge:
      return val >= c.rhs;
    case Rel::Eq:
      return val == c.rhs;
  }
  return false;
}

namespace {

RVec base_certificate(const QcqpModel& q, const InnerInstance& inst,
                      const Placement& placement) {
  if (placement.translations.size() != inst.shapes.size())
    throw std::invalid_argument("certificate: placement size mismatch");
  RVec v = rvec_zero(q.num_vars());
  v[0] = placement.s;
  const int n = inst.dim;
  for (size_t i = 0; i < inst.shapes.size(); ++i)
    for (int c = 0; c < n; ++c)
      v[coord_var(static_cast<int>(i), c, n)] =
          placement.translations[i][c];
  v[q.t_index()] = Rat(1);
  return v;
}

int var_index(const QcqpModel& q, const std::string& name) {
  auto it = std::find(q.var_names.begin(), q.var_names.end(), name);
  if (it == q.var_names.end())
    throw std::logic_error("certificate: missing variable " + name);
  return static_cast<int>(it - q.var_names.begin());
}

}  // namespace

RVec qcqp1_certificate(const QcqpModel& q, const InnerInstance& inst_in,
                       const Placement& placement) {
  InnerInstance inst = inst_in.normalized();
  RVec v = base_certificate(q, inst, placement);
  auto pairs = pair_regions(inst.shapes);
  for (const auto& p : pairs) {
    RVec d = placement.translations[static_cast<size_t>(p.j)] -
             placement.translations[static_cast<size_t>(p.i)];
    bool any = false;
    for (size_t f = 0; f < p.region.facets.size(); ++f) {
      const Facet& fc = p.region.facets[f];
      if (dot(fc.normal, d) >= Rat(fc.rhs)) {
        v[var_index(q, "z" + pair_suffix(p) + "_" + std::to_string(f + 1))] =
            Rat(1);
        any = true;
      }
    }
    if (!any)
      throw std::invalid_argument(
          "qcqp1_certificate: placement has overlapping interiors");
  }
  return v;
}

RVec qcqp2_certificate(const QcqpModel& q, const InnerInstance& inst_in,
                       const Placement& placement) {
  InnerInstance inst = inst_in.normalized();
  RVec v = base_certificate(q, inst, placement);
  const int n = inst.dim;
  auto pairs = pair_regions(inst.shapes);
  for (const auto& p : pairs) {
    // A rational unit normal must solve sum-of-squares = 1, so the search is
    // over the signed axis directions. Offset = midpoint of the two ranges.
    bool found = false;
    for (int c = 0; c < n && !found; ++c) {
      for (int sgn = 1; sgn >= -1 && !found; sgn -= 2) {
        Rat imax, jmin;
        bool first = true;
        for (const auto& vert : inst.shapes[static_cast<size_t>(p.i)].vertices()) {
          Rat val = Rat(sgn) * (placement.translations[static_cast<size_t>(p.i)][c] +
                                Rat(vert[c]));
          if (first || val > imax) imax = val;
          first = false;
        }
        first = true;
        for (const auto& vert : inst.shapes[static_cast<size_t>(p.j)].vertices()) {
          Rat val = Rat(sgn) * (placement.translations[static_cast<size_t>(p.j)][c] +
                                Rat(vert[c]));
          if (first || val < jmin) jmin = val;
          first = false;
        }
        if (imax <= jmin) {
          v[var_index(q, std::string(kNormalLetters[c]) + pair_suffix(p))] =
              Rat(sgn);
          v[var_index(q, "gamma" + pair_suffix(p))] = (imax + jmin) / Rat(2);
          found = true;
        }
      }
    }
    if (!found)
      throw std::invalid_argument(
          "qcqp2_certificate: pair not separated along any axis");
  }
  return v;
}

RVec qcqp3_certificate(const QcqpModel& q, const InnerInstance& inst_in,
                       const Placement& placement) {
  InnerInstance inst = inst_in.normalized();
  RVec v = base_certificate(q, inst, placement);
  const int n = inst.dim;
  auto pairs = pair_regions(inst.shapes);
  for (const auto& p : pairs) {
    RVec d = placement.translations[static_cast<size_t>(p.j)] -
             placement.translations[static_cast<size_t>(p.i)];
    // Farkas certificate: scale the most violated facet normal so every
    // difference-vertex row clears 1. Needs strict separation of closures.
    const Facet* best = nullptr;
    Rat best_gap;
    for (const auto& f : p.region.facets) {
      Rat gap = dot(f.normal, d) - Rat(f.rhs);
      if (!best || gap > best_gap) {
        best = &f;
        best_gap = gap;
      }
    }
    if (!best || !(best_gap > Rat(0)))
      throw std::invalid_argument(
          "qcqp3_certificate: closures touch, no finite certificate");
    Rat scale = Rat(1) / best_gap;
    for (int c = 0; c < n; ++c)
      v[var_index(q, std::string(kNormalLetters[c]) + pair_suffix(p))] =
          -scale * Rat(best->normal[c]);
  }
  return v;
}

void export_sdpa(const SdpRelaxation& r, std::ostream& os) {
  const int m = static_cast<int>(r.constraints.size());
  std::vector<int> slack_of(static_cast<size_t>(m), 0);
  int n_slack = 0;
  for (int k = 0; k < m; ++k)
    if (r.constraints[static_cast<size_t>(k)].rel != Rel::Eq)
      slack_of[static_cast<size_t>(k)] = ++n_slack;

  struct Entry {
    int mat, blk, i, j;
    Rat value;
  };
  std::vector<Entry> entries;
  auto push_matrix = [&](int mat, const RMat& M) {
    for (Eigen::Index i = 0; i < M.rows(); ++i)
      for (Eigen::Index j = i; j < M.cols(); ++j)
        if (!M(i, j).is_zero())
          entries.push_back({mat, 1, static_cast<int>(i) + 1,
                             static_cast<int>(j) + 1, M(i, j)});
  };
  // Dual form: max tr(F0 Y) with tr(Fk Y) = c_k; our minimization enters
  // negated.
  push_matrix(0, -r.objective);
  for (int k = 0; k < m; ++k) {
    const auto& c = r.constraints[static_cast<size_t>(k)];
    push_matrix(k + 1, c.matrix);
    if (c.rel != Rel::Eq) {
      int sl = slack_of[static_cast<size_t>(k)];
      entries.push_back({k + 1, 2, sl, sl, Rat(c.rel == Rel::Le ? 1 : -1)});
    }
  }

  std::vector<std::string> rhs_dec(static_cast<size_t>(m));
  std::vector<std::string> header_comments;
  for (int k = 0; k < m; ++k) {
    bool exact = false;
    rhs_dec[static_cast<size_t>(k)] =
        r.constraints[static_cast<size_t>(k)].rhs.decimal_str(exact);
    if (!exact)
      header_comments.push_back(
          "*EXACT rhs " + std::to_string(k + 1) + " " +
          r.constraints[static_cast<size_t>(k)].rhs.str());
  }
  for (const auto& e : entries) {
    bool exact = false;
    e.value.decimal_str(exact);
    if (!exact)
      header_comments.push_back("*EXACT " + std::to_string(e.mat) + " " +
                                std::to_string(e.blk) + " " +
                                std::to_string(e.i) + " " + std::to_string(e.j) +
                                " " + e.value.str());
  }

  os << "* simplex packing SDP relaxation (moment matrix block of size "
     << r.d << ")\n";
  os << "* dual encoding: solver objective = -(relaxation minimum)\n";
  for (const auto& c : header_comments) os << c << "\n";
  os << m << "\n";
  os << (n_slack > 0 ? 2 : 1) << "\n";
  if (n_slack > 0)
    os << r.d << " -" << n_slack << "\n";
  else
    os << r.d << "\n";
  for (int k = 0; k < m; ++k) os << (k ? " " : "") << rhs_dec[static_cast<size_t>(k)];
  os << "\n";
  for (const auto& e : entries) {
    bool exact = false;
    os << e.mat << " " << e.blk << " " << e.i << " " << e.j << " "
       << e.value.decimal_str(exact) << "\n";
  }
}

SdpRelaxation read_sdpa(std::istream& is) {
  SdpRelaxation r;
  struct ExactEntry {
    int mat, blk, i, j;
    Rat value;
  };
  std::vector<ExactEntry> exact_entries;
  std::vector<std::pair<int, Rat>> exact_rhs;

  std::string line;
  std::vector<std::string> data_lines;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line[0] == '*' || line[0] == '"') {
      std::istringstream cs(line);
      std::string tag;
      cs >> tag;
      if (tag == "*EXACT") {
        std::string first;
        cs >> first;
        if (first == "rhs") {
          int k;
          std::string val;
          cs >> k >> val;
          exact_rhs.emplace_back(k, Rat::parse(val));
        } else {
          ExactEntry e;
          e.mat = std::stoi(first);
          std::string val;
          cs >> e.blk >> e.i >> e.j >> val;
          e.value = Rat::parse(val);
          exact_entries.push_back(std::move(e));
        }
      }
      continue;
    }
    data_lines.push_back(line);
  }
  if (data_lines.size() < 4) throw ParseError("sdpa: truncated file");
  int m = std::stoi(data_lines[0]);
  int nblocks = std::stoi(data_lines[1]);
  std::istringstream bs(data_lines[2]);
  std::vector<int> blocks;
  int bsz;
  while (bs >> bsz) blocks.push_back(bsz);
  if (static_cast<int>(blocks.size()) != nblocks)
    throw ParseError("sdpa: block count mismatch");
  r.d = blocks[0];
  if (r.d <= 0) throw ParseError("sdpa: first block must be the SDP block");

  auto parse_value = [](const std::string& tok) {
    auto dotp = tok.find('.');
    if (dotp == std::string::npos) return Rat::parse(tok);
    std::string digits = tok.substr(0, dotp) + tok.substr(dotp + 1);
    int kk = static_cast<int>(tok.size() - dotp - 1);
    mpz_class den(1);
    for (int i = 0; i < kk; ++i) den *= 10;
    return Rat(mpz_class(digits), den);
  };

  std::vector<Rat> rhs(static_cast<size_t>(m));
  {
    std::istringstream cs(data_lines[3]);
    std::string tok;
    for (int k = 0; k < m; ++k) {
      if (!(cs >> tok)) throw ParseError("sdpa: short rhs vector");
      rhs[static_cast<size_t>(k)] = parse_value(tok);
    }
  }
  for (auto& [k, v] : exact_rhs) rhs[static_cast<size_t>(k - 1)] = v;

  r.objective = rmat_zero(r.d, r.d);
  r.constraints.resize(static_cast<size_t>(m));
  for (int k = 0; k < m; ++k) {
    r.constraints[static_cast<size_t>(k)].matrix = rmat_zero(r.d, r.d);
    r.constraints[static_cast<size_t>(k)].rel = Rel::Eq;
    r.constraints[static_cast<size_t>(k)].rhs = rhs[static_cast<size_t>(k)];
  }

  auto apply_entry = [&](int mat, int blk, int i, int j, const Rat& v) {
    if (blk == 1) {
      RMat& M = mat == 0 ? r.objective
                         : r.constraints[static_cast<size_t>(mat - 1)].matrix;
      M(i - 1, j - 1) = v;
      if (i != j) M(j - 1, i - 1) = v;
    } else {
      if (mat == 0) throw ParseError("sdpa: objective touches slack block");
      r.constraints[static_cast<size_t>(mat - 1)].rel =
          v > Rat(0) ? Rel::Le : Rel::Ge;
    }
  };

  for (size_t li = 4; li < data_lines.size(); ++li) {
    std::istringstream es(data_lines[li]);
    int mat, blk, i, j;
    std::string val;
    if (!(es >> mat >> blk >> i >> j >> val))
      throw ParseError("sdpa: bad entry line: " + data_lines[li]);
    apply_entry(mat, blk, i, j, parse_value(val));
  }
  for (const auto& e : exact_entries) apply_entry(e.mat, e.blk, e.i, e.j, e.value);

  // Undo the dual-encoding negation of the objective.
  r.objective = -r.objective;
  return r;
}

}  // namespace sympack
