#include "sympack/inner.hpp"

#include <algorithm>
#include <chrono>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace sympack {

namespace {

constexpr const char* kCoordLetters[3] = {"x", "y", "z"};

int coord_var(int shape, int coord, int dim) { return 1 + shape * dim + coord; }

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

LinearProgram base_lp(const InnerInstance& inst) {
  const int n = inst.dim;
  const int m = static_cast<int>(inst.shapes.size());
  LinearProgram lp;
  lp.num_vars = 1 + n * m;
  lp.objective = rvec_zero(lp.num_vars);
  lp.objective[0] = Rat(1);
  for (int i = 0; i < m; ++i) {
    ContainmentConstants cc = containment_constants(inst.shapes[i]);
    for (int c = 0; c < n; ++c) {
      LinRow row;
      row.coeffs = rvec_zero(lp.num_vars);
      row.coeffs[coord_var(i, c, n)] = Rat(1);
      row.rel = Rel::Ge;
      row.rhs = Rat(cc.lower[c]);
      lp.rows.push_back(std::move(row));
    }
    LinRow sum;
    sum.coeffs = rvec_zero(lp.num_vars);
    for (int c = 0; c < n; ++c) sum.coeffs[coord_var(i, c, n)] = Rat(1);
    sum.coeffs[0] = Rat(-1);
    sum.rel = Rel::Le;
    sum.rhs = Rat(cc.sum_bound);
    lp.rows.push_back(std::move(sum));
  }
  for (auto& row : symmetry_rows(inst)) lp.rows.push_back(std::move(row));
  return lp;
}

struct Search {
  const InnerInstance& inst;
  std::vector<PairInfo> pairs;
  std::vector<bool> assigned;
  std::optional<Rat> best;
  RVec best_point;
  std::optional<Rat> pruned_min;
  InnerStats stats;

  explicit Search(const InnerInstance& in)
      : inst(in), pairs(pair_regions(in.shapes)) {
    assigned.assign(pairs.size(), false);
  }

  RVec difference(const RVec& x, const PairInfo& p) const {
    const int n = inst.dim;
    RVec d = rvec_zero(n);
    for (int c = 0; c < n; ++c)
      d[c] = x[coord_var(p.j, c, n)] - x[coord_var(p.i, c, n)];
    return d;
  }

  void dfs(const SimplexTableau& t) {
    ++stats.nodes;
    Rat val = t.objective_value();
    if (inst.cutoff && val > *inst.cutoff) {
      if (!pruned_min || val < *pruned_min) pruned_min = val;
      return;
    }
    if (best && val >= *best) return;  // cannot improve the minimum
    RVec x = t.point();
    int branch_pair = -1;
    Rat branch_depth;
    for (size_t p = 0; p < pairs.size(); ++p) {
      if (assigned[p]) continue;
      RVec d = difference(x, pairs[p]);
      // Depth inside the region: min over facets of (rhs - normal.d),
      // positive iff strictly interior, i.e. the pair overlaps.
      Rat depth;
      bool first = true;
      for (const auto& f : pairs[p].region.facets) {
        Rat slack = Rat(f.rhs) - dot(f.normal, d);
        if (first || slack < depth) depth = slack;
        first = false;
      }
      if (depth > Rat(0) && (branch_pair < 0 || depth > branch_depth)) {
        branch_pair = static_cast<int>(p);
        branch_depth = depth;
      }
    }
    if (branch_pair < 0) {
      if (!best || val < *best) {
        best = val;
        best_point = x;
      }
      return;
    }
    const PairInfo& p = pairs[static_cast<size_t>(branch_pair)];
    const int n = inst.dim;
    for (const auto& f : p.region.facets) {
      SimplexTableau child(t);
      LinRow row;
      row.coeffs = rvec_zero(1 + n * static_cast<int>(inst.shapes.size()));
      for (int c = 0; c < n; ++c) {
        row.coeffs[coord_var(p.j, c, n)] += Rat(f.normal[c]);
        row.coeffs[coord_var(p.i, c, n)] -= Rat(f.normal[c]);
      }
      row.rel = Rel::Ge;
      row.rhs = Rat(f.rhs);
      ++stats.lp_calls;
      if (child.add_row_reoptimize(row) != LpStatus::Optimal) continue;
      assigned[static_cast<size_t>(branch_pair)] = true;
      dfs(child);
      assigned[static_cast<size_t>(branch_pair)] = false;
    }
  }
};

}  // namespace

InnerInstance InnerInstance::normalized() const {
  InnerInstance out = *this;
  for (auto& s : out.shapes) s = canonicalize(s);
  std::sort(out.shapes.begin(), out.shapes.end(), shape_less);
  return out;
}

std::vector<LinRow> symmetry_rows(const InnerInstance& inst) {
  if (inst.symmetry_type < 0 || inst.symmetry_type > 2)
    throw std::invalid_argument("symmetry_rows: unknown type " +
                                std::to_string(inst.symmetry_type));
  std::vector<LinRow> rows;
  if (inst.symmetry_type == 0) return rows;
  const int n = inst.dim;
  const int m = static_cast<int>(inst.shapes.size());
  const int nvars = 1 + n * m;
  for (int i = 0; i + 1 < m; ++i) {
    if (!(inst.shapes[i] == inst.shapes[i + 1])) continue;
    LinRow row;
    row.coeffs = rvec_zero(nvars);
    if (inst.symmetry_type == 1) {
      row.coeffs[coord_var(i, 0, n)] = Rat(1);
      row.coeffs[coord_var(i + 1, 0, n)] = Rat(-1);
    } else {
      for (int c = 0; c < n; ++c) {
        row.coeffs[coord_var(i, c, n)] = Rat(1);
        row.coeffs[coord_var(i + 1, c, n)] = Rat(-1);
      }
    }
    row.rel = Rel::Le;
    row.rhs = Rat(0);
    rows.push_back(std::move(row));
  }
  return rows;
}

Rat big_m_value(const Facet& facet, const Rat& shat) {
  Int abs_sum = 0;
  for (Eigen::Index c = 0; c < facet.normal.size(); ++c)
    abs_sum += std::abs(facet.normal[c]);
  return Rat(abs_sum) * shat + Rat(facet.rhs);
}

Placement strip_placement(const std::vector<SimplexShape>& shapes,
                          const Rat& gap) {
  Placement pl;
  if (shapes.empty()) {
    pl.s = Rat(0);
    return pl;
  }
  const int n = shapes[0].dim();
  Rat offset(0);
  for (size_t i = 0; i < shapes.size(); ++i) {
    ContainmentConstants cc = containment_constants(shapes[i]);
    RVec t = rvec_zero(n);
    t[0] = offset + Rat(cc.lower[0]);
    for (int c = 1; c < n; ++c) t[c] = Rat(cc.lower[c]);
    pl.translations.push_back(std::move(t));
    offset += Rat(enclosing_side(shapes[i]));
    if (i + 1 < shapes.size()) offset += gap;
  }
  pl.s = offset;
  return pl;
}

InnerResult solve_inner(const InnerInstance& inst_in) {
  if (inst_in.shapes.empty())
    throw std::invalid_argument("solve_inner: empty multiset");
  const auto t0 = std::chrono::steady_clock::now();
  InnerInstance inst = inst_in.normalized();
  for (const auto& s : inst.shapes)
    if (s.dim() != inst.dim)
      throw std::invalid_argument("solve_inner: shape dimension mismatch");

  Search search(inst);
  SimplexTableau root(base_lp(inst));
  ++search.stats.lp_calls;
  if (root.solve() != LpStatus::Optimal)
    throw std::logic_error("solve_inner: containment LP must be solvable");
  search.dfs(root);

  InnerResult res;
  res.stats = search.stats;
  if (search.best) {
    res.status = InnerStatus::Optimal;
    res.value = *search.best;
    res.placement.s = *search.best;
    const int n = inst.dim;
    for (size_t i = 0; i < inst.shapes.size(); ++i) {
      RVec t = rvec_zero(n);
      for (int c = 0; c < n; ++c)
        t[c] = search.best_point[coord_var(static_cast<int>(i), c, n)];
      res.placement.translations.push_back(std::move(t));
    }
  } else if (search.pruned_min) {
    res.status = InnerStatus::CutoffExceeded;
    res.value = *search.pruned_min;
  } else {
    res.status = InnerStatus::InfeasibleByCutoff;
  }
  res.stats.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return res;
}

BigMModel build_bigm_milp(const InnerInstance& inst_in, const Rat& shat) {
  InnerInstance inst = inst_in.normalized();
  const int n = inst.dim;
  const int m = static_cast<int>(inst.shapes.size());
  BigMModel model;
  model.dim = n;
  model.m = m;
  model.shat = shat;

  model.var_names.push_back("s");
  for (int i = 0; i < m; ++i)
    for (int c = 0; c < n; ++c)
      model.var_names.push_back(std::string(kCoordLetters[c]) + "_" +
                                std::to_string(i + 1));
  auto pairs = pair_regions(inst.shapes);
  std::vector<int> z_base;
  for (const auto& p : pairs) {
    z_base.push_back(static_cast<int>(model.var_names.size()));
    for (size_t f = 0; f < p.region.facets.size(); ++f) {
      std::string name = "z_" + std::to_string(p.i + 1) + "_" +
                         std::to_string(p.j + 1) + "_" + std::to_string(f + 1);
      model.binary_vars.push_back(static_cast<int>(model.var_names.size()));
      model.var_names.push_back(std::move(name));
    }
  }
  const int nv = model.num_vars();
  model.objective = rvec_zero(nv);
  model.objective[0] = Rat(1);

  std::vector<ContainmentConstants> ccs;
  for (const auto& s : inst.shapes) ccs.push_back(containment_constants(s));

  // Containment, grouped by coordinate, then the sum rows.
  for (int c = 0; c < n; ++c) {
    for (int i = 0; i < m; ++i) {
      LinRow row;
      row.coeffs = rvec_zero(nv);
      row.coeffs[coord_var(i, c, n)] = Rat(1);
      row.rel = Rel::Ge;
      row.rhs = Rat(ccs[static_cast<size_t>(i)].lower[c]);
      model.rows.push_back(std::move(row));
    }
  }
  for (int i = 0; i < m; ++i) {
    LinRow row;
    row.coeffs = rvec_zero(nv);
    for (int c = 0; c < n; ++c) row.coeffs[coord_var(i, c, n)] = Rat(1);
    row.coeffs[0] = Rat(-1);
    row.rel = Rel::Le;
    row.rhs = Rat(ccs[static_cast<size_t>(i)].sum_bound);
    model.rows.push_back(std::move(row));
  }
  // At-least-one rows, then the Big-M rows.
  for (size_t p = 0; p < pairs.size(); ++p) {
    LinRow row;
    row.coeffs = rvec_zero(nv);
    for (size_t f = 0; f < pairs[p].region.facets.size(); ++f)
      row.coeffs[z_base[p] + static_cast<int>(f)] = Rat(1);
    row.rel = Rel::Ge;
    row.rhs = Rat(1);
    model.rows.push_back(std::move(row));
  }
  for (size_t p = 0; p < pairs.size(); ++p) {
    const auto& pr = pairs[p];
    for (size_t f = 0; f < pr.region.facets.size(); ++f) {
      const Facet& fc = pr.region.facets[f];
      Rat big_m = big_m_value(fc, shat);
      LinRow row;
      row.coeffs = rvec_zero(nv);
      for (int c = 0; c < n; ++c) {
        row.coeffs[coord_var(pr.j, c, n)] += Rat(fc.normal[c]);
        row.coeffs[coord_var(pr.i, c, n)] -= Rat(fc.normal[c]);
      }
      row.coeffs[z_base[p] + static_cast<int>(f)] = -big_m;
      row.rel = Rel::Ge;
      row.rhs = Rat(fc.rhs) - big_m;
      model.rows.push_back(std::move(row));
    }
  }
  return model;
}

namespace {

// Writes a rational LP coefficient; emits an `\ exact` header comment when
// the decimal expansion does not terminate.
std::string lp_number(const Rat& v, const std::string& where,
                      std::vector<std::string>& exact_comments) {
  bool exact = false;
  std::string dec = v.decimal_str(exact);
  if (!exact)
    exact_comments.push_back("\\ exact " + where + " " + v.str());
  return dec;
}

std::string term_string(const Rat& coef, const std::string& var, bool first,
                        const std::string& where,
                        std::vector<std::string>& exact_comments) {
  std::string out;
  Rat a = coef;
  if (a.sign() < 0) {
    out += "- ";
    a = -a;
  } else if (!first) {
    out += "+ ";
  }
  if (!(a == Rat(1))) out += lp_number(a, where, exact_comments) + " ";
  out += var;
  return out;
}

}  // namespace

void export_lp_file(const BigMModel& model, std::ostream& os) {
  std::vector<std::string> exact_comments;
  std::ostringstream body;

  body << "Minimize\n obj:";
  {
    bool first = true;
    for (int j = 0; j < model.num_vars(); ++j) {
      if (model.objective[j].is_zero()) continue;
      body << " "
           << term_string(model.objective[j], model.var_names[j], first,
                          "obj coef " + model.var_names[j], exact_comments);
      first = false;
    }
  }
  body << "\nSubject To\n";
  for (size_t r = 0; r < model.rows.size(); ++r) {
    const LinRow& row = model.rows[r];
    std::string rname = "r" + std::to_string(r + 1);
    body << " " << rname << ":";
    bool first = true;
    for (int j = 0; j < model.num_vars(); ++j) {
      if (row.coeffs[j].is_zero()) continue;
      body << " "
           << term_string(row.coeffs[j], model.var_names[j], first,
                          rname + " coef " + model.var_names[j],
                          exact_comments);
      first = false;
    }
    const char* rel = row.rel == Rel::Le ? "<=" : row.rel == Rel::Ge ? ">=" : "=";
    body << " " << rel << " "
         << lp_number(row.rhs, rname + " rhs", exact_comments) << "\n";
  }
  body << "Bounds\n";
  body << " s <= " << lp_number(model.shat, "bound s", exact_comments) << "\n";
  for (int j = 1; j < model.num_vars(); ++j) {
    if (std::find(model.binary_vars.begin(), model.binary_vars.end(), j) !=
        model.binary_vars.end())
      continue;
    body << " " << model.var_names[j] << " free\n";
  }
  if (!model.binary_vars.empty()) {
    body << "Binaries\n";
    for (int j : model.binary_vars) body << " " << model.var_names[j] << "\n";
  }
  body << "End\n";

  os << "\\ simplex packing inner MILP\n";
  os << "\\ meta dim " << model.dim << " m " << model.m << "\n";
  for (const auto& c : exact_comments) os << c << "\n";
  os << body.str();
}

namespace {

Rat parse_lp_number(const std::string& tok) {
  auto dotp = tok.find('.');
  if (dotp == std::string::npos) return Rat::parse(tok);
  std::string digits = tok.substr(0, dotp) + tok.substr(dotp + 1);
  int k = static_cast<int>(tok.size() - dotp - 1);
  mpz_class den(1);
  for (int i = 0; i < k; ++i) den *= 10;
  return Rat(mpz_class(digits), den);
}

}  // namespace

BigMModel read_lp_file(std::istream& is) {
  BigMModel model;
  std::map<std::string, int> var_index;
  auto intern = [&](const std::string& name) {
    auto it = var_index.find(name);
    if (it != var_index.end()) return it->second;
    int idx = static_cast<int>(model.var_names.size());
    model.var_names.push_back(name);
    var_index.emplace(name, idx);
    return idx;
  };

  struct ExactFix {
    std::string row, kind, var;
    Rat value;
  };
  std::vector<ExactFix> fixes;

  std::vector<std::pair<std::string, std::string>> constraint_lines;
  std::string objective_line;
  std::vector<std::string> bounds_lines, binary_names;

  enum Section { None, Obj, Rows, Bnds, Bins } section = None;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line[0] == '\\') {
      std::istringstream cs(line.substr(1));
      std::string word;
      cs >> word;
      if (word == "meta") {
        std::string k;
        while (cs >> k) {
          if (k == "dim") cs >> model.dim;
          if (k == "m") cs >> model.m;
        }
      } else if (word == "exact") {
        // Forms: `exact <row> coef <var> <p/q>`, `exact <row> rhs <p/q>`,
        // `exact bound s <p/q>`.
        std::string w1, w2;
        cs >> w1 >> w2;
        ExactFix fx;
        if (w1 == "bound") {
          std::string val;
          cs >> val;
          fx.kind = "bound";
          fx.value = Rat::parse(val);
        } else if (w2 == "rhs") {
          std::string val;
          cs >> val;
          fx.row = w1;
          fx.kind = "rhs";
          fx.value = Rat::parse(val);
        } else if (w2 == "coef") {
          std::string var, val;
          cs >> var >> val;
          fx.row = w1;
          fx.kind = "coef";
          fx.var = var;
          fx.value = Rat::parse(val);
        } else {
          throw ParseError("lp file: bad exact comment: " + line);
        }
        fixes.push_back(std::move(fx));
      }
      continue;
    }
    std::string trimmed = line;
    trimmed.erase(0, trimmed.find_first_not_of(" \t"));
    if (trimmed == "Minimize") {
      section = Obj;
      continue;
    }
    if (trimmed == "Subject To") {
      section = Rows;
      continue;
    }
    if (trimmed == "Bounds") {
      section = Bnds;
      continue;
    }
    if (trimmed == "Binaries") {
      section = Bins;
      continue;
    }
    if (trimmed == "End") break;
    switch (section) {
      case Obj: {
        auto colon = trimmed.find(':');
        objective_line +=
            " " + (colon == std::string::npos ? trimmed
                                              : trimmed.substr(colon + 1));
        break;
      }
      case Rows: {
        auto colon = trimmed.find(':');
        if (colon == std::string::npos)
          throw ParseError("lp file: constraint without label: " + trimmed);
        std::string name = trimmed.substr(0, colon);
        name.erase(0, name.find_first_not_of(" \t"));
        constraint_lines.emplace_back(name, trimmed.substr(colon + 1));
        break;
      }
      case Bnds:
        bounds_lines.push_back(trimmed);
        break;
      case Bins: {
        std::istringstream bs(trimmed);
        std::string nm;
        while (bs >> nm) binary_names.push_back(nm);
        break;
      }
      default:
        throw ParseError("lp file: text outside any section: " + trimmed);
    }
  }

  // Intern names in the writer's order: objective, free bounds, binaries.
  // This reproduces the builder's variable layout on round trips.
  auto parse_terms = [&](const std::string& text,
                         std::vector<std::pair<int, Rat>>& terms, Rel* rel,
                         Rat* rhs) {
    std::istringstream ts(text);
    std::string tok;
    Rat sign(1), pending(1);
    bool have_coef = false;
    bool after_rel = false;
    Rel r = Rel::Le;
    while (ts >> tok) {
      if (tok == "+") continue;
      if (tok == "-") {
        sign = -sign;
        continue;
      }
      if (tok == "<=" || tok == ">=" || tok == "=") {
        if (!rel) throw ParseError("lp file: relation in objective");
        r = tok == "<=" ? Rel::Le : tok == ">=" ? Rel::Ge : Rel::Eq;
        after_rel = true;
        continue;
      }
      if (after_rel) {
        if (!rhs) throw ParseError("lp file: unexpected rhs");
        *rel = r;
        *rhs = parse_lp_number(tok);
        return;
      }
      if ((tok[0] >= '0' && tok[0] <= '9') || tok[0] == '.') {
        pending = parse_lp_number(tok);
        have_coef = true;
        continue;
      }
      Rat coef = sign * (have_coef ? pending : Rat(1));
      terms.emplace_back(intern(tok), coef);
      sign = Rat(1);
      pending = Rat(1);
      have_coef = false;
    }
    if (rel) throw ParseError("lp file: constraint missing relation");
  };

  std::vector<std::pair<int, Rat>> obj_terms;
  parse_terms(objective_line, obj_terms, nullptr, nullptr);

  for (const auto& b : bounds_lines) {
    std::istringstream bs(b);
    std::string v1, v2, v3;
    bs >> v1 >> v2 >> v3;
    if (v2 == "free") {
      intern(v1);
    } else if (v1 == "s" && v2 == "<=") {
      model.shat = parse_lp_number(v3);
    } else {
      throw ParseError("lp file: unsupported bound line: " + b);
    }
  }
  for (const auto& nm : binary_names) model.binary_vars.push_back(intern(nm));

  struct RawRow {
    std::string name;
    std::vector<std::pair<int, Rat>> terms;
    Rel rel = Rel::Le;
    Rat rhs;
  };
  std::vector<RawRow> raw;
  for (auto& [name, text] : constraint_lines) {
    RawRow rr;
    rr.name = name;
    parse_terms(text, rr.terms, &rr.rel, &rr.rhs);
    raw.push_back(std::move(rr));
  }

  const int nv = static_cast<int>(model.var_names.size());
  model.objective = rvec_zero(nv);
  for (auto& [j, c] : obj_terms) model.objective[j] = c;
  std::map<std::string, size_t> row_index;
  for (auto& rr : raw) {
    LinRow row;
    row.coeffs = rvec_zero(nv);
    for (auto& [j, c] : rr.terms) row.coeffs[j] = c;
    row.rel = rr.rel;
    row.rhs = rr.rhs;
    row_index[rr.name] = model.rows.size();
    model.rows.push_back(std::move(row));
  }
  for (const auto& fx : fixes) {
    if (fx.kind == "bound") {
      model.shat = fx.value;
      continue;
    }
    auto it = row_index.find(fx.row);
    if (it == row_index.end())
      throw ParseError("lp file: exact comment for unknown row " + fx.row);
    if (fx.kind == "rhs") {
      model.rows[it->second].rhs = fx.value;
    } else {
      auto vit = var_index.find(fx.var);
      if (vit == var_index.end())
        throw ParseError("lp file: exact comment for unknown var " + fx.var);
      model.rows[it->second].coeffs[vit->second] = fx.value;
    }
  }
  return model;
}

}  // namespace sympack
