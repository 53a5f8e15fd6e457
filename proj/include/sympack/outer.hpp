#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sympack/inner.hpp"

namespace sympack {

// Sorted list of shape indices into a shapelist; the canonical multiset key.
struct Multiset {
  int dim = 2;
  std::vector<int> idx;  // non-decreasing

  int card() const { return static_cast<int>(idx.size()); }
  std::string key() const;  // "n;k;i,i,..."
  bool operator==(const Multiset& o) const {
    return dim == o.dim && idx == o.idx;
  }
  bool operator<(const Multiset& o) const {
    if (dim != o.dim) return dim < o.dim;
    if (idx.size() != o.idx.size()) return idx.size() < o.idx.size();
    return idx < o.idx;
  }
};

// Multiset inclusion with multiplicities.
bool is_submultiset(const Multiset& sub, const Multiset& super);

struct SearchNode {
  Multiset ms;
  Rat lower_bound;  // inherited from the parent's inner value
};

struct DbRecord {
  enum class Status { Optimal, LowerBound };
  Status status = Status::LowerBound;
  Rat value;
};

// File-backed map from canonical multiset key to its strongest known record,
// plus the in-memory list of blocking multisets (multisets whose recorded
// bound exceeded the global upper bound when they were touched). Blocking
// entries are re-checked against the current bound at query time, so records
// never go stale when the bound moves between runs.
class BoundsDatabase {
public:
  std::optional<DbRecord> lookup(const Multiset& ms) const;
  // Keeps the strongest record (optimal beats lower-bound; larger lower
  // bounds beat smaller) and appends a line to the attached file, if any.
  void record(const Multiset& ms, const DbRecord& rec);

  void add_blocker(const Multiset& ms, const Rat& bound);
  // True iff some blocker with bound strictly above `ub` is a sub-multiset.
  bool is_blocked(const Multiset& ms, const Rat& ub) const;

  // Text format, one record per line: `n;k;idx,idx,...;status;p/q`.
  // Appends during a run, compacted (one line per key) on save.
  void load(const std::string& path);         // throws ParseError with line no
  void save(const std::string& path) const;   // compacted rewrite
  void attach_append_file(const std::string& path);

  size_t size() const { return records_.size(); }

private:
  struct Blocker {
    Multiset ms;
    Rat bound;
  };
  std::map<std::string, std::pair<Multiset, DbRecord>> records_;
  std::vector<Blocker> blockers_;
  std::string append_path_;
};

struct CensusEntry {
  Multiset ms;
  Placement placement;
};

struct RunReport {
  int dim = 2;
  int k = 0;
  Rat initial_bound;
  Rat s_value;                     // exact s_k
  std::vector<CensusEntry> census;  // every optimal multiset, one placement each
  std::int64_t inner_calls = 0;
  double total_inner_seconds = 0;
  double max_inner_seconds = 0;
  double wall_seconds = 0;
  std::int64_t nodes = 0;
  std::int64_t fathomed_bound = 0;
  std::int64_t fathomed_blocked = 0;
  std::int64_t db_hits = 0;
  bool bound_attained = true;  // false when no leaf reached the initial bound
};

struct OuterConfig {
  Rat initial_bound;      // a valid upper bound on the optimum
  int symmetry_type = 2;
  int workers = 1;
  enum class Order { Fifo, BestBound } order = Order::Fifo;
  BoundsDatabase* db = nullptr;  // optional; shared across runs
};

// Breadth-first branch-and-bound over shape multisets. The queue is seeded
// with all 1-multisets; children extend by shape indices >= the node's last
// index, which reaches every sorted multiset exactly once. Nodes are fathomed
// when a known bound strictly exceeds the global upper bound; ties are kept,
// which is what makes the census complete. With several workers the bound is
// read as a snapshot per node and every commit re-checks the current bound,
// so s_k and the census set do not depend on the worker count.
RunReport solve_outer(int k, int dim,
                      const std::vector<SimplexShape>& shapelist,
                      const OuterConfig& config);

std::vector<SearchNode> extend_node(const SearchNode& node, int shapelist_size);

struct DeriveStats {
  std::int64_t with_duplicates = 0;
  std::vector<Multiset> distinct;
  std::int64_t matched = 0;        // |distinct ∩ against|
  std::int64_t against_count = 0;  // |against|
  std::int64_t nonextendable = 0;  // |against \ distinct|
};

// From every multiset with s distinct shapes derive the s sub-multisets
// obtained by removing one copy of each distinct shape; compare against a
// census one cardinality below.
DeriveStats derive_submultisets(const std::vector<Multiset>& census_k,
                                const std::vector<Multiset>& against);

}  // namespace sympack
