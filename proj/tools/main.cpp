#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sympack/relax.hpp"
#include "sympack/render.hpp"
#include "sympack/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBadConfig = 2;
constexpr int kExitEmpty = 3;
constexpr int kExitIo = 4;

sympack::Rat parse_rat_arg(const std::string& s) {
  try {
    return sympack::Rat::parse(s);
  } catch (const std::exception&) {
    throw CLI::ValidationError("expected a rational p/q, got '" + s + "'");
  }
}

std::string slurp(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

void spill(const std::string& path, const std::string& text) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write " + path);
  os << text;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace sympack;
  CLI::App app{"Exact simplex packing: widths, censuses and model export"};
  app.require_subcommand(1);

  // shapelist
  auto* sl = app.add_subcommand("shapelist", "Print the shapelist for a bound");
  int sl_dim = 2;
  std::string sl_sbar = "2";
  sl->add_option("--dim", sl_dim, "Dimension (2 or 3)")->required();
  sl->add_option("--sbar", sl_sbar, "Admissibility bound p/q")->required();

  // pack
  auto* pk = app.add_subcommand("pack", "Exact k-packing width and census");
  PackConfig pc;
  std::string pk_bound, pk_order = "fifo";
  bool pk_no_figures = false;
  pk->add_option("--dim", pc.dim, "Dimension (2 or 3)")->required();
  pk->add_option("--k", pc.k, "Number of simplices")->required();
  pk->add_option("--bound", pk_bound, "Initial upper bound p/q");
  pk->add_option("--db", pc.db_path, "Bounds database file");
  pk->add_option("--workers", pc.workers, "Worker threads");
  pk->add_option("--sym", pc.symmetry_type, "Symmetry breaking type 0|1|2");
  pk->add_option("--out", pc.out_dir, "Output directory");
  pk->add_option("--order", pk_order, "Queue order: fifo|best");
  pk->add_flag("--no-figures", pk_no_figures, "Skip placement/figure files");

  // inner
  auto* in = app.add_subcommand("inner", "Solve one multiset exactly");
  int in_dim = 2, in_sym = 2, in_sdpa = 0;
  std::string in_shapes, in_cutoff, in_lp, in_out;
  in->add_option("--dim", in_dim, "Dimension (2 or 3)")->required();
  in->add_option("--shapes", in_shapes, "Shapelist-format multiset file")
      ->required();
  in->add_option("--cutoff", in_cutoff, "Cutoff p/q");
  in->add_option("--sym", in_sym, "Symmetry breaking type 0|1|2");
  in->add_option("--export-lp", in_lp, "Write the Big-M MILP and exit");
  in->add_option("--export-sdpa", in_sdpa,
                 "Write the SDP relaxation of QCQP 1|2|3 and exit");
  in->add_option("--out", in_out, "Output path for --export-sdpa");

  // derive
  auto* dv = app.add_subcommand("derive", "Sub-multiset derivation statistics");
  std::string dv_census, dv_against;
  dv->add_option("--census", dv_census, "Census JSON for cardinality k")
      ->required();
  dv->add_option("--against", dv_against, "Census JSON for cardinality k-1")
      ->required();

  // render
  auto* rd = app.add_subcommand("render", "Render a placement JSON");
  std::string rd_placement, rd_out;
  bool rd_tikz = false;
  rd->add_option("--placement", rd_placement, "Placement JSON file")->required();
  rd->add_option("--out", rd_out, "Output file (.svg or .tex)")->required();
  rd->add_flag("--tikz", rd_tikz, "Emit standalone TikZ instead of SVG");

  // compare
  auto* cp = app.add_subcommand("compare",
                                "Compare external solver logs to an exact value");
  std::string cp_exact, cp_log;
  cp->add_option("--exact", cp_exact, "Exact optimum p/q")->required();
  cp->add_option("--log", cp_log, "Log file with value=<float> lines")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadConfig;
  }

  try {
    if (sl->parsed()) {
      Rat sbar = parse_rat_arg(sl_sbar);
      if (sl_dim != 2 && sl_dim != 3) {
        std::cerr << "shapelist: dim must be 2 or 3\n";
        return kExitBadConfig;
      }
      auto shapes = enumerate_shapelist(sl_dim, sbar);
      write_shapelist(std::cout, sl_dim, sbar, shapes);
      return kExitOk;
    }

    if (pk->parsed()) {
      if (pc.dim != 2 && pc.dim != 3) {
        std::cerr << "pack: dim must be 2 or 3\n";
        return kExitBadConfig;
      }
      if (pc.k < 1 || pc.workers < 1 ||
          pc.symmetry_type < 0 || pc.symmetry_type > 2) {
        std::cerr << "pack: invalid k, workers or symmetry type\n";
        return kExitBadConfig;
      }
      if (!pk_bound.empty()) pc.bound = parse_rat_arg(pk_bound);
      if (pk_order == "best")
        pc.order = OuterConfig::Order::BestBound;
      else if (pk_order != "fifo") {
        std::cerr << "pack: --order must be fifo or best\n";
        return kExitBadConfig;
      }
      pc.figures = !pk_no_figures;
      if (const char* env = std::getenv("SYMPACK_DB"))
        if (pc.db_path.empty()) pc.db_path = env;
      PackOutcome out = run_pack(pc);
      if (!out.report.bound_attained) {
        std::cerr << "pack: no packing found at or below bound "
                  << out.bound_used.str() << "\n";
        return kExitEmpty;
      }
      std::cout << out.report.s_value.str() << "\n";
      std::cerr << "census " << out.report.census.size() << " multisets, "
                << out.report.inner_calls << " inner calls, wall "
                << out.report.wall_seconds << "s\n";
      return kExitOk;
    }

    if (in->parsed()) {
      std::ifstream is(in_shapes);
      if (!is) {
        std::cerr << "inner: cannot open " << in_shapes << "\n";
        return kExitIo;
      }
      ShapelistFile sf = read_shapelist(is);
      if (sf.dim != in_dim) {
        std::cerr << "inner: file dim " << sf.dim << " != --dim " << in_dim
                  << "\n";
        return kExitBadConfig;
      }
      if (sf.shapes.empty()) {
        std::cerr << "inner: empty multiset\n";
        return kExitBadConfig;
      }
      InnerInstance inst;
      inst.dim = in_dim;
      inst.shapes = sf.shapes;
      inst.symmetry_type = in_sym;
      if (!in_cutoff.empty()) inst.cutoff = parse_rat_arg(in_cutoff);

      if (!in_lp.empty()) {
        Rat shat = inst.cutoff ? *inst.cutoff
                               : strip_placement(inst.normalized().shapes).s;
        BigMModel model = build_bigm_milp(inst, shat);
        std::ofstream os(in_lp);
        if (!os) {
          std::cerr << "inner: cannot write " << in_lp << "\n";
          return kExitIo;
        }
        export_lp_file(model, os);
        return kExitOk;
      }
      if (in_sdpa != 0) {
        if (in_sdpa < 1 || in_sdpa > 3) {
          std::cerr << "inner: --export-sdpa takes 1, 2 or 3\n";
          return kExitBadConfig;
        }
        QcqpModel q = in_sdpa == 1   ? build_qcqp1(inst)
                      : in_sdpa == 2 ? build_qcqp2(inst)
                                     : build_qcqp3(inst);
        SdpRelaxation r = relax_to_sdp(q);
        if (in_out.empty()) {
          export_sdpa(r, std::cout);
        } else {
          std::ofstream os(in_out);
          if (!os) {
            std::cerr << "inner: cannot write " << in_out << "\n";
            return kExitIo;
          }
          export_sdpa(r, os);
        }
        return kExitOk;
      }

      InnerResult res = solve_inner(inst);
      if (res.status != InnerStatus::Optimal) {
        std::cerr << "no packing at or below the cutoff; certified lower bound "
                  << (res.status == InnerStatus::CutoffExceeded
                          ? res.value.str()
                          : std::string("unavailable"))
                  << "\n";
        return kExitEmpty;
      }
      std::cout << res.value.str() << "\n";
      for (size_t i = 0; i < res.placement.translations.size(); ++i) {
        std::cout << "t_" << i + 1 << " =";
        for (Eigen::Index c = 0; c < res.placement.translations[i].size(); ++c)
          std::cout << " " << res.placement.translations[i][c].str();
        std::cout << "\n";
      }
      return kExitOk;
    }

    if (dv->parsed()) {
      CensusFile ck = parse_census_json(slurp(dv_census));
      CensusFile ck1 = parse_census_json(slurp(dv_against));
      DeriveStats st = derive_submultisets(ck.multisets, ck1.multisets);
      std::cout << st.with_duplicates << " " << st.distinct.size() << " "
                << st.against_count << " " << st.nonextendable << "\n";
      return kExitOk;
    }

    if (rd->parsed()) {
      std::vector<SimplexShape> shapes;
      Placement pl;
      parse_placement_json(slurp(rd_placement), shapes, pl);
      bool warned = false;
      std::string out =
          rd_tikz ? render_tikz(shapes, pl, &warned) : render_svg(shapes, pl, &warned);
      spill(rd_out, out);
      if (warned)
        std::cerr << "render: overlap warning, verify_packing failed\n";
      return kExitOk;
    }

    if (cp->parsed()) {
      Rat exact = parse_rat_arg(cp_exact);
      std::ifstream is(cp_log);
      if (!is) {
        std::cerr << "compare: cannot open " << cp_log << "\n";
        return kExitIo;
      }
      double exact_d = exact.to_double();
      std::string line;
      int found = 0;
      while (std::getline(is, line)) {
        auto pos = line.find("value=");
        if (pos == std::string::npos) continue;
        double v = std::strtod(line.c_str() + pos + 6, nullptr);
        ++found;
        double gap = exact_d - v;
        std::cout << "value=" << v << " exact=" << exact.str()
                  << " gap=" << gap
                  << (v <= exact_d + 1e-9 ? " sound" : " VIOLATES-UPPER-BOUND")
                  << "\n";
      }
      if (!found) {
        std::cerr << "compare: no value= lines in " << cp_log << "\n";
        return kExitEmpty;
      }
      return kExitOk;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitOk;
}
