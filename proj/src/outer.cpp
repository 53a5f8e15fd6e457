#include "sympack/outer.hpp"

#include <algorithm>
#include <chrono>
#include <condition_variable>
#include <deque>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

namespace sympack {

std::string Multiset::key() const {
  std::ostringstream os;
  os << dim << ';' << idx.size() << ';';
  for (size_t i = 0; i < idx.size(); ++i) {
    if (i) os << ',';
    os << idx[i];
  }
  return os.str();
}

bool is_submultiset(const Multiset& sub, const Multiset& super) {
  if (sub.dim != super.dim) return false;
  size_t i = 0, j = 0;
  while (i < sub.idx.size() && j < super.idx.size()) {
    if (sub.idx[i] == super.idx[j]) {
      ++i;
      ++j;
    } else if (sub.idx[i] > super.idx[j]) {
      ++j;
    } else {
      return false;
    }
  }
  return i == sub.idx.size();
}

std::optional<DbRecord> BoundsDatabase::lookup(const Multiset& ms) const {
  auto it = records_.find(ms.key());
  if (it == records_.end()) return std::nullopt;
  return it->second.second;
}

namespace {

bool stronger(const DbRecord& a, const DbRecord& b) {
  // Is `a` strictly stronger than `b`?
  if (a.status == DbRecord::Status::Optimal &&
      b.status != DbRecord::Status::Optimal)
    return true;
  if (a.status != DbRecord::Status::Optimal &&
      b.status == DbRecord::Status::Optimal)
    return false;
  return a.value > b.value;
}

std::string record_line(const Multiset& ms, const DbRecord& rec) {
  std::ostringstream os;
  os << ms.key() << ';'
     << (rec.status == DbRecord::Status::Optimal ? "optimal" : "lower-bound")
     << ';' << rec.value.str();
  return os.str();
}

}  // namespace

void BoundsDatabase::record(const Multiset& ms, const DbRecord& rec) {
  auto key = ms.key();
  auto it = records_.find(key);
  if (it != records_.end()) {
    if (!stronger(rec, it->second.second)) return;
    it->second.second = rec;
  } else {
    records_.emplace(key, std::make_pair(ms, rec));
  }
  if (!append_path_.empty()) {
    std::ofstream os(append_path_, std::ios::app);
    if (os) os << record_line(ms, rec) << "\n";
  }
}

void BoundsDatabase::add_blocker(const Multiset& ms, const Rat& bound) {
  for (auto& b : blockers_) {
    if (b.ms == ms) {
      if (bound > b.bound) b.bound = bound;
      return;
    }
  }
  blockers_.push_back({ms, bound});
}

bool BoundsDatabase::is_blocked(const Multiset& ms, const Rat& ub) const {
  for (const auto& b : blockers_) {
    if (b.bound <= ub) continue;  // stale against the current bound
    if (b.ms.card() > ms.card()) continue;
    if (is_submultiset(b.ms, ms)) return true;
  }
  return false;
}

void BoundsDatabase::load(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ParseError("bounds db: cannot open " + path);
  std::string line;
  size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string dim_s, k_s, idx_s, status_s, value_s;
    if (!std::getline(ls, dim_s, ';') || !std::getline(ls, k_s, ';') ||
        !std::getline(ls, idx_s, ';') || !std::getline(ls, status_s, ';') ||
        !std::getline(ls, value_s)) {
      throw ParseError("bounds db line " + std::to_string(lineno) +
                       ": expected n;k;idx,...;status;p/q");
    }
    Multiset ms;
    DbRecord rec;
    try {
      ms.dim = std::stoi(dim_s);
      size_t k = std::stoul(k_s);
      std::istringstream xs(idx_s);
      std::string tok;
      while (std::getline(xs, tok, ',')) ms.idx.push_back(std::stoi(tok));
      if (ms.idx.size() != k)
        throw ParseError("cardinality mismatch");
      if (!std::is_sorted(ms.idx.begin(), ms.idx.end()))
        throw ParseError("indices not sorted");
      if (status_s == "optimal")
        rec.status = DbRecord::Status::Optimal;
      else if (status_s == "lower-bound")
        rec.status = DbRecord::Status::LowerBound;
      else
        throw ParseError("bad status '" + status_s + "'");
      rec.value = Rat::parse(value_s);
    } catch (const std::exception& e) {
      throw ParseError("bounds db line " + std::to_string(lineno) + ": " +
                       e.what());
    }
    auto key = ms.key();
    auto it = records_.find(key);
    if (it == records_.end())
      records_.emplace(key, std::make_pair(ms, rec));
    else if (stronger(rec, it->second.second))
      it->second.second = rec;
  }
}

void BoundsDatabase::save(const std::string& path) const {
  std::ofstream os(path, std::ios::trunc);
  if (!os) throw ParseError("bounds db: cannot write " + path);
  for (const auto& [key, entry] : records_)
    os << record_line(entry.first, entry.second) << "\n";
}

void BoundsDatabase::attach_append_file(const std::string& path) {
  append_path_ = path;
}

std::vector<SearchNode> extend_node(const SearchNode& node,
                                    int shapelist_size) {
  std::vector<SearchNode> children;
  int start = node.ms.idx.empty() ? 0 : node.ms.idx.back();
  for (int i = start; i < shapelist_size; ++i) {
    SearchNode child;
    child.ms = node.ms;
    child.ms.idx.push_back(i);
    child.lower_bound = node.lower_bound;
    children.push_back(std::move(child));
  }
  return children;
}

DeriveStats derive_submultisets(const std::vector<Multiset>& census_k,
                                const std::vector<Multiset>& against) {
  DeriveStats st;
  std::set<Multiset> derived;
  for (const auto& ms : census_k) {
    size_t i = 0;
    while (i < ms.idx.size()) {
      size_t j = i;
      while (j < ms.idx.size() && ms.idx[j] == ms.idx[i]) ++j;
      Multiset sub;
      sub.dim = ms.dim;
      sub.idx = ms.idx;
      sub.idx.erase(sub.idx.begin() + static_cast<std::ptrdiff_t>(i));
      ++st.with_duplicates;
      derived.insert(std::move(sub));
      i = j;
    }
  }
  st.distinct.assign(derived.begin(), derived.end());
  std::set<Multiset> against_set(against.begin(), against.end());
  for (const auto& ms : st.distinct)
    if (against_set.count(ms)) ++st.matched;
  st.against_count = static_cast<std::int64_t>(against.size());
  st.nonextendable = st.against_count - st.matched;
  return st;
}

namespace {

struct OuterState {
  std::mutex mu;
  std::condition_variable cv;
  std::deque<SearchNode> queue;
  std::int64_t pending = 0;  // queued + in flight
  Rat ub;
  std::vector<CensusEntry> census;
  BoundsDatabase* db = nullptr;
  RunReport report;
  bool best_bound_order = false;

  // Pop under lock; best-bound order scans for the smallest lower bound.
  SearchNode pop_front_locked() {
    if (!best_bound_order) {
      SearchNode n = std::move(queue.front());
      queue.pop_front();
      return n;
    }
    auto best = queue.begin();
    for (auto it = queue.begin(); it != queue.end(); ++it)
      if (it->lower_bound < best->lower_bound) best = it;
    SearchNode n = std::move(*best);
    queue.erase(best);
    return n;
  }
};

void outer_worker(OuterState& st, int k,
                  const std::vector<SimplexShape>& shapelist,
                  const OuterConfig& config) {
  const int nshapes = static_cast<int>(shapelist.size());
  for (;;) {
    SearchNode node;
    Rat ub_snapshot;
    bool need_solve = false;
    bool is_leaf = false;
    Rat node_value;
    Rat cutoff;
    {
      std::unique_lock<std::mutex> lock(st.mu);
      st.cv.wait(lock, [&] { return !st.queue.empty() || st.pending == 0; });
      if (st.queue.empty()) return;
      node = st.pop_front_locked();
      ub_snapshot = st.ub;
      ++st.report.nodes;
      is_leaf = node.ms.card() == k;

      // Fathoming rules, in flowchart order: the node's own bound, blocking
      // sub-multisets, then a recorded bound above the global bound.
      bool fathomed = false;
      if (node.lower_bound > ub_snapshot) {
        ++st.report.fathomed_bound;
        fathomed = true;
      } else if (st.db->is_blocked(node.ms, ub_snapshot)) {
        ++st.report.fathomed_blocked;
        fathomed = true;
      } else {
        auto known = st.db->lookup(node.ms);
        if (known && known->value > ub_snapshot) {
          st.db->add_blocker(node.ms, known->value);
          ++st.report.fathomed_bound;
          fathomed = true;
        } else if (known && known->status == DbRecord::Status::Optimal) {
          ++st.report.db_hits;
          node_value = known->value;
          // Leaves re-solve at their known value so the census entry carries
          // an explicit placement; interior hits skip the solver entirely.
          need_solve = is_leaf;
          cutoff = node_value;
        } else {
          need_solve = true;
          cutoff = ub_snapshot;
        }
      }
      if (fathomed) {
        --st.pending;
        st.cv.notify_all();
        continue;
      }
    }

    std::optional<Placement> placement;
    InnerResult res;
    if (need_solve) {
      InnerInstance inst;
      inst.dim = node.ms.dim;
      for (int i : node.ms.idx)
        inst.shapes.push_back(shapelist[static_cast<size_t>(i)]);
      inst.cutoff = cutoff;
      inst.symmetry_type = config.symmetry_type;
      res = solve_inner(inst);
    }

    {
      std::unique_lock<std::mutex> lock(st.mu);
      if (need_solve) {
        ++st.report.inner_calls;
        st.report.total_inner_seconds += res.stats.seconds;
        st.report.max_inner_seconds =
            std::max(st.report.max_inner_seconds, res.stats.seconds);
        if (res.status == InnerStatus::Optimal) {
          node_value = res.value;
          placement = res.placement;
          st.db->record(node.ms, {DbRecord::Status::Optimal, node_value});
        } else {
          // Certified lower bound strictly above the cutoff.
          st.db->record(node.ms, {DbRecord::Status::LowerBound, res.value});
          st.db->add_blocker(node.ms, res.value);
          --st.pending;
          st.cv.notify_all();
          continue;
        }
      }
      // Commit against the current bound, which may have improved while the
      // node was being solved.
      if (node_value > st.ub) {
        st.db->add_blocker(node.ms, node_value);
      } else if (is_leaf) {
        if (node_value < st.ub) {
          st.ub = node_value;
          st.census.clear();
        }
        CensusEntry entry;
        entry.ms = node.ms;
        if (placement) entry.placement = *placement;
        st.census.push_back(std::move(entry));
      } else {
        SearchNode base{node.ms, node_value};
        for (auto& child : extend_node(base, nshapes)) {
          st.queue.push_back(std::move(child));
          ++st.pending;
        }
      }
      --st.pending;
      st.cv.notify_all();
    }
  }
}

}  // namespace

RunReport solve_outer(int k, int dim,
                      const std::vector<SimplexShape>& shapelist,
                      const OuterConfig& config) {
  if (k < 1) throw std::invalid_argument("solve_outer: k must be >= 1");
  if (shapelist.empty())
    throw std::invalid_argument("solve_outer: empty shapelist for the bound");
  const auto t0 = std::chrono::steady_clock::now();

  BoundsDatabase local_db;
  OuterState st;
  st.db = config.db ? config.db : &local_db;
  st.ub = config.initial_bound;
  st.best_bound_order = config.order == OuterConfig::Order::BestBound;
  st.report.dim = dim;
  st.report.k = k;
  st.report.initial_bound = config.initial_bound;

  for (int i = 0; i < static_cast<int>(shapelist.size()); ++i) {
    SearchNode seed;
    seed.ms.dim = dim;
    seed.ms.idx = {i};
    seed.lower_bound = Rat(0);
    st.queue.push_back(std::move(seed));
    ++st.pending;
  }

  const int nworkers = std::max(1, config.workers);
  std::vector<std::thread> threads;
  threads.reserve(static_cast<size_t>(nworkers) - 1);
  for (int w = 1; w < nworkers; ++w)
    threads.emplace_back(outer_worker, std::ref(st), k, std::cref(shapelist),
                         std::cref(config));
  outer_worker(st, k, shapelist, config);
  for (auto& t : threads) t.join();

  // The census holds the leaves whose value equalled the bound at commit
  // time; entries from before the final improvement were cleared then.
  st.report.s_value = st.ub;
  st.report.bound_attained = !st.census.empty();
  std::sort(st.census.begin(), st.census.end(),
            [](const CensusEntry& a, const CensusEntry& b) {
              return a.ms < b.ms;
            });
  st.report.census = std::move(st.census);
  st.report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return st.report;
}

}  // namespace sympack
