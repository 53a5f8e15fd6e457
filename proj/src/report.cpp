#include "sympack/report.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "sympack/render.hpp"

namespace sympack {

using nlohmann::json;

Rat default_bound(int dim, int k) {
  if (dim == 2) {
    static const std::vector<Rat> table = {
        Rat(1),      Rat(2),      Rat(2),      Rat(2),     Rat(5, 2),
        Rat(17, 6),  Rat(3),      Rat(3),      Rat(3),     Rat(10, 3),
        Rat(7, 2),   Rat(56, 15), Rat(23, 6),  Rat(79, 20), Rat(4),
        Rat(4),      Rat(17, 4),  Rat(13, 3),  Rat(9, 2),  Rat(97, 21)};
    if (k >= 1 && k <= static_cast<int>(table.size()))
      return table[static_cast<size_t>(k - 1)];
  }
  if (dim == 3) {
    if (k == 1) return Rat(1);
    if (k >= 2 && k <= 8) return Rat(2);
  }
  return Rat(k);
}

namespace {

json rat_json(const Rat& r) { return r.str(); }

json translations_json(const Placement& pl) {
  json arr = json::array();
  for (const auto& t : pl.translations) {
    json tv = json::array();
    for (Eigen::Index c = 0; c < t.size(); ++c) tv.push_back(t[c].str());
    arr.push_back(tv);
  }
  return arr;
}

json shapes_json(const std::vector<SimplexShape>& shapes) {
  json arr = json::array();
  for (const auto& s : shapes) {
    json sj = json::array();
    for (int c = 0; c < s.dim(); ++c) {
      json col = json::array();
      for (int r = 0; r < s.dim(); ++r) col.push_back(s.cols(r, c));
      sj.push_back(col);
    }
    arr.push_back(sj);
  }
  return arr;
}

RVec parse_rvec(const json& arr) {
  RVec v = rvec_zero(static_cast<Eigen::Index>(arr.size()));
  for (size_t i = 0; i < arr.size(); ++i)
    v[static_cast<Eigen::Index>(i)] = Rat::parse(arr[i].get<std::string>());
  return v;
}

}  // namespace

std::string placement_json(const std::vector<SimplexShape>& shapes,
                           const Placement& placement, const Multiset* ms) {
  json j;
  j["dim"] = shapes.empty() ? 2 : shapes[0].dim();
  j["s"] = rat_json(placement.s);
  j["shapes"] = shapes_json(shapes);
  j["translations"] = translations_json(placement);
  if (ms) j["multiset"] = ms->idx;
  return j.dump(2);
}

void parse_placement_json(const std::string& text,
                          std::vector<SimplexShape>& shapes,
                          Placement& placement) {
  json j = json::parse(text);
  int dim = j.at("dim").get<int>();
  shapes.clear();
  for (const auto& sj : j.at("shapes")) {
    SimplexShape s;
    s.cols.resize(dim, dim);
    int c = 0;
    for (const auto& col : sj) {
      int r = 0;
      for (const auto& x : col) s.cols(r++, c) = x.get<Int>();
      ++c;
    }
    shapes.push_back(std::move(s));
  }
  placement.s = Rat::parse(j.at("s").get<std::string>());
  placement.translations.clear();
  for (const auto& tj : j.at("translations"))
    placement.translations.push_back(parse_rvec(tj));
}

std::string census_json(const RunReport& report,
                        const std::vector<SimplexShape>& shapelist) {
  (void)shapelist;
  json j;
  j["dim"] = report.dim;
  j["k"] = report.k;
  j["s"] = rat_json(report.s_value);
  json entries = json::array();
  for (const auto& e : report.census) {
    json ej;
    ej["multiset"] = e.ms.idx;
    ej["s"] = rat_json(e.placement.s);
    ej["translations"] = translations_json(e.placement);
    entries.push_back(std::move(ej));
  }
  j["entries"] = std::move(entries);
  return j.dump(2);
}

CensusFile parse_census_json(const std::string& text) {
  json j = json::parse(text);
  CensusFile out;
  out.dim = j.at("dim").get<int>();
  out.k = j.at("k").get<int>();
  out.s_value = Rat::parse(j.at("s").get<std::string>());
  for (const auto& e : j.at("entries")) {
    Multiset ms;
    ms.dim = out.dim;
    for (const auto& i : e.at("multiset")) ms.idx.push_back(i.get<int>());
    out.multisets.push_back(std::move(ms));
  }
  return out;
}

std::string report_json(const RunReport& report, const Rat& bound_used,
                        int workers) {
  json j;
  j["dim"] = report.dim;
  j["k"] = report.k;
  j["initial_bound"] = rat_json(bound_used);
  j["s"] = rat_json(report.s_value);
  j["census_count"] = report.census.size();
  j["inner_calls"] = report.inner_calls;
  j["inner_seconds_total"] = report.total_inner_seconds;
  j["inner_seconds_avg"] =
      report.inner_calls ? report.total_inner_seconds / report.inner_calls : 0.0;
  j["inner_seconds_max"] = report.max_inner_seconds;
  j["wall_seconds"] = report.wall_seconds;
  j["nodes"] = report.nodes;
  j["fathomed_bound"] = report.fathomed_bound;
  j["fathomed_blocked"] = report.fathomed_blocked;
  j["db_hits"] = report.db_hits;
  j["workers"] = workers;
  return j.dump(2);
}

PackOutcome run_pack(const PackConfig& config) {
  namespace fs = std::filesystem;
  PackOutcome out;
  out.bound_used = config.bound ? *config.bound : default_bound(config.dim, config.k);
  out.shapelist = enumerate_shapelist(config.dim, out.bound_used);
  if (out.shapelist.empty())
    throw std::invalid_argument("pack: empty shapelist for bound " +
                                out.bound_used.str());

  BoundsDatabase db;
  if (!config.db_path.empty()) {
    if (fs::exists(config.db_path)) db.load(config.db_path);
    db.attach_append_file(config.db_path);
  }

  OuterConfig oc;
  oc.initial_bound = out.bound_used;
  oc.symmetry_type = config.symmetry_type;
  oc.workers = config.workers;
  oc.order = config.order;
  oc.db = &db;
  out.report = solve_outer(config.k, config.dim, out.shapelist, oc);

  if (!config.db_path.empty()) db.save(config.db_path);

  fs::create_directories(config.out_dir);
  std::string stem = std::to_string(config.dim) + "d_k" +
                     std::to_string(config.k);
  out.report_path = (fs::path(config.out_dir) / ("report_" + stem + ".json")).string();
  out.census_path = (fs::path(config.out_dir) / ("census_" + stem + ".json")).string();
  {
    std::ofstream os(out.report_path);
    if (!os) throw std::runtime_error("pack: cannot write " + out.report_path);
    os << report_json(out.report, out.bound_used, config.workers) << "\n";
  }
  {
    std::ofstream os(out.census_path);
    if (!os) throw std::runtime_error("pack: cannot write " + out.census_path);
    os << census_json(out.report, out.shapelist) << "\n";
  }
  if (config.figures) {
    for (size_t e = 0; e < out.report.census.size(); ++e) {
      const auto& entry = out.report.census[e];
      std::vector<SimplexShape> shapes;
      for (int i : entry.ms.idx)
        shapes.push_back(out.shapelist[static_cast<size_t>(i)]);
      std::string base = stem + "_" + std::to_string(e + 1);
      {
        std::ofstream os(fs::path(config.out_dir) / ("placement_" + base + ".json"));
        os << placement_json(shapes, entry.placement, &entry.ms) << "\n";
      }
      {
        std::ofstream os(fs::path(config.out_dir) / ("fig_" + base + ".svg"));
        os << render_svg(shapes, entry.placement);
      }
    }
  }
  return out;
}

}  // namespace sympack
