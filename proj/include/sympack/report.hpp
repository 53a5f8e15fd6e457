#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sympack/outer.hpp"

namespace sympack {

// Known-good initial bounds per cardinality (2D: reciprocals of the published
// widths, including the lower-bound reciprocals beyond k = 13, all of which
// are valid upper bounds on the container side; 3D: 1 then 2 up to k = 8).
// Falls back to k, the side of the side-by-side strip packing of k standard
// simplices, which is always attainable.
Rat default_bound(int dim, int k);

struct PackConfig {
  int dim = 2;
  int k = 1;
  std::optional<Rat> bound;       // overrides the table
  int symmetry_type = 2;
  int workers = 1;
  OuterConfig::Order order = OuterConfig::Order::Fifo;
  std::string db_path;            // empty: in-memory only
  std::string out_dir = ".";
  bool figures = true;
};

struct PackOutcome {
  RunReport report;
  std::vector<SimplexShape> shapelist;
  Rat bound_used;
  std::string report_path, census_path;
};

// The full pipeline: enumerate the shapelist for the bound, load/attach the
// database, run the outer search, write the report JSON, census JSON and one
// placement JSON + SVG figure per census entry.
PackOutcome run_pack(const PackConfig& config);

// JSON serialization. Rationals are exact "p/q" strings everywhere.
std::string placement_json(const std::vector<SimplexShape>& shapes,
                           const Placement& placement,
                           const Multiset* ms = nullptr);
void parse_placement_json(const std::string& text,
                          std::vector<SimplexShape>& shapes,
                          Placement& placement);

std::string census_json(const RunReport& report,
                        const std::vector<SimplexShape>& shapelist);
struct CensusFile {
  int dim = 2;
  int k = 0;
  Rat s_value;
  std::vector<Multiset> multisets;
};
CensusFile parse_census_json(const std::string& text);

std::string report_json(const RunReport& report, const Rat& bound_used,
                        int workers);

}  // namespace sympack
