#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "sympack/outer.hpp"
#include "testutil.hpp"

using namespace sympack;
using namespace sympack::testutil;

namespace {

Multiset ms(std::vector<int> idx, int dim = 2) {
  Multiset m;
  m.dim = dim;
  m.idx = std::move(idx);
  return m;
}

// Reference sub-multiset check by multiplicity counting.
bool brute_submultiset(const Multiset& a, const Multiset& b) {
  if (a.dim != b.dim) return false;
  std::map<int, int> need, have;
  for (int i : a.idx) ++need[i];
  for (int i : b.idx) ++have[i];
  for (auto [i, n] : need)
    if (have[i] < n) return false;
  return true;
}

std::set<std::vector<int>> census_keys(const RunReport& r) {
  std::set<std::vector<int>> out;
  for (const auto& e : r.census) out.insert(e.ms.idx);
  return out;
}

}  // namespace

TEST_CASE("sub-multiset inclusion") {
  CHECK(is_submultiset(ms({0, 1}), ms({0, 1, 1})));
  CHECK(is_submultiset(ms({1, 1}), ms({0, 1, 1})));
  CHECK_FALSE(is_submultiset(ms({1, 1, 1}), ms({0, 1, 1})));
  CHECK(is_submultiset(ms({}), ms({0})));
  CHECK_FALSE(is_submultiset(ms({0}, 2), ms({0}, 3)));

  std::mt19937 rng(23);
  std::uniform_int_distribution<int> len(0, 5), val(0, 3);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<int> a, b;
    int la = len(rng), lb = len(rng);
    for (int i = 0; i < la; ++i) a.push_back(val(rng));
    for (int i = 0; i < lb; ++i) b.push_back(val(rng));
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(is_submultiset(ms(a), ms(b)) == brute_submultiset(ms(a), ms(b)));
  }
}

TEST_CASE("blocking checks re-validate against the current bound") {
  BoundsDatabase db;
  CHECK_FALSE(db.is_blocked(ms({0, 1}), Rat(2)));
  db.add_blocker(ms({1}), Rat(5, 2));
  CHECK(db.is_blocked(ms({0, 1}), Rat(2)));
  CHECK(db.is_blocked(ms({1, 1, 3}), Rat(2)));
  CHECK_FALSE(db.is_blocked(ms({0, 2}), Rat(2)));
  // A larger global bound turns the same record stale.
  CHECK_FALSE(db.is_blocked(ms({0, 1}), Rat(3)));
}

TEST_CASE("node extension covers each sorted multiset exactly once") {
  SearchNode root;
  root.ms = ms({});
  root.lower_bound = Rat(0);
  CHECK(extend_node(root, 8).size() == 8);

  SearchNode last;
  last.ms = ms({7});
  CHECK(extend_node(last, 8).size() == 1);

  // The union over all level-2 nodes of their children is all 3-multisets.
  std::set<std::vector<int>> all;
  const int n = 4;
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      SearchNode node;
      node.ms = ms({a, b});
      for (const auto& child : extend_node(node, n)) {
        CHECK(std::is_sorted(child.ms.idx.begin(), child.ms.idx.end()));
        CHECK(all.insert(child.ms.idx).second);  // no duplicates
      }
    }
  // C(n + 2, 3) multisets of cardinality 3 over n shapes.
  CHECK(all.size() == static_cast<size_t>(n * (n + 1) * (n + 2) / 6));
}

TEST_CASE("derivation statistics") {
  SUBCASE("empty census gives zeros") {
    DeriveStats st = derive_submultisets({}, {});
    CHECK(st.with_duplicates == 0);
    CHECK(st.distinct.empty());
    CHECK(st.against_count == 0);
    CHECK(st.nonextendable == 0);
  }
  SUBCASE("hand example") {
    // {0,0,1} -> {0,1} and {0,0}; {0,1,1} -> {1,1} and {0,1}.
    DeriveStats st = derive_submultisets({ms({0, 0, 1}), ms({0, 1, 1})},
                                         {ms({0, 1}), ms({2, 2})});
    CHECK(st.with_duplicates == 4);
    CHECK(st.distinct.size() == 3);
    CHECK(st.matched == 1);
    CHECK(st.against_count == 2);
    CHECK(st.nonextendable == 1);
  }
}

TEST_CASE("bounds database file round trip") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "sympack_db_test";
  fs::create_directories(dir);
  std::string path = (dir / "bounds.txt").string();

  BoundsDatabase db;
  db.record(ms({0}), {DbRecord::Status::Optimal, Rat(1)});
  db.record(ms({0, 3}), {DbRecord::Status::LowerBound, Rat(5, 2)});
  db.record(ms({0, 3}), {DbRecord::Status::LowerBound, Rat(2)});  // weaker, kept out
  db.save(path);

  BoundsDatabase loaded;
  loaded.load(path);
  CHECK(loaded.size() == 2);
  auto rec = loaded.lookup(ms({0}));
  REQUIRE(rec.has_value());
  CHECK(rec->status == DbRecord::Status::Optimal);
  CHECK(rec->value == Rat(1));
  rec = loaded.lookup(ms({0, 3}));
  REQUIRE(rec.has_value());
  CHECK(rec->status == DbRecord::Status::LowerBound);
  CHECK(rec->value == Rat(5, 2));

  SUBCASE("the single-shape record line is exact") {
    std::ifstream is(path);
    std::string line, found;
    while (std::getline(is, line))
      if (line.rfind("2;1;0;", 0) == 0) found = line;
    CHECK(found == "2;1;0;optimal;1/1");
  }
  SUBCASE("optimal records beat lower bounds on reload") {
    std::ofstream os(path, std::ios::app);
    os << "2;2;0,3;optimal;5/2\n";
    os.close();
    BoundsDatabase again;
    again.load(path);
    CHECK(again.lookup(ms({0, 3}))->status == DbRecord::Status::Optimal);
  }
  SUBCASE("malformed lines report their number") {
    std::ofstream os(path, std::ios::app);
    os << "2;1;0;bogus;1/1\n";
    os.close();
    BoundsDatabase bad;
    try {
      bad.load(path);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
  }
  fs::remove_all(dir);
}

TEST_CASE("outer search reproduces the small published runs") {
  auto sl1 = enumerate_shapelist(2, Rat(1));
  OuterConfig oc;
  oc.initial_bound = Rat(1);
  RunReport r1 = solve_outer(1, 2, sl1, oc);
  CHECK(r1.s_value == Rat(1));
  CHECK(r1.census.size() == 1);

  auto sl2 = enumerate_shapelist(2, Rat(2));
  oc.initial_bound = Rat(2);
  RunReport r2 = solve_outer(2, 2, sl2, oc);
  CHECK(r2.s_value == Rat(2));
  CHECK(r2.census.size() == 11);
  for (const auto& e : r2.census) {
    std::vector<SimplexShape> shapes;
    for (int i : e.ms.idx) shapes.push_back(sl2[static_cast<size_t>(i)]);
    CHECK(verify_packing(shapes, e.placement));
    CHECK(e.placement.s == Rat(2));
  }
}

TEST_CASE("small-scale completeness against full enumeration") {
  auto sl = enumerate_shapelist(2, Rat(2));
  const int n = static_cast<int>(sl.size());

  for (int k = 2; k <= 3; ++k) {
    // Brute force: solve every k-multiset cold.
    Rat best;
    bool first = true;
    std::set<std::vector<int>> brute_census;
    std::vector<std::vector<int>> all;
    std::vector<int> cur;
    std::function<void(int)> gen = [&](int start) {
      if (static_cast<int>(cur.size()) == k) {
        all.push_back(cur);
        return;
      }
      for (int i = start; i < n; ++i) {
        cur.push_back(i);
        gen(i);
        cur.pop_back();
      }
    };
    gen(0);
    std::map<std::vector<int>, Rat> values;
    for (const auto& idx : all) {
      std::vector<SimplexShape> shapes;
      for (int i : idx) shapes.push_back(sl[static_cast<size_t>(i)]);
      InnerInstance inst;
      inst.dim = 2;
      inst.shapes = shapes;
      InnerResult res = solve_inner(inst);
      REQUIRE(res.status == InnerStatus::Optimal);
      values[idx] = res.value;
      if (first || res.value < best) {
        best = res.value;
        brute_census.clear();
        first = false;
      }
      if (res.value == best) brute_census.insert(idx);
    }

    OuterConfig oc;
    oc.initial_bound = Rat(2);
    RunReport run = solve_outer(k, 2, sl, oc);
    CHECK(run.s_value == best);
    CHECK(census_keys(run) == brute_census);
  }
}

TEST_CASE("worker count changes neither the width nor the census") {
  auto sl = enumerate_shapelist(2, Rat(2));
  OuterConfig one;
  one.initial_bound = Rat(2);
  one.workers = 1;
  RunReport a = solve_outer(4, 2, sl, one);

  OuterConfig four = one;
  four.workers = 4;
  RunReport b = solve_outer(4, 2, sl, four);

  CHECK(a.s_value == b.s_value);
  CHECK(census_keys(a) == census_keys(b));
  CHECK(a.census.size() == 4);
}

TEST_CASE("best-bound order gives the same result") {
  auto sl = enumerate_shapelist(2, Rat(2));
  OuterConfig oc;
  oc.initial_bound = Rat(2);
  oc.order = OuterConfig::Order::BestBound;
  RunReport r = solve_outer(3, 2, sl, oc);
  CHECK(r.s_value == Rat(2));
  CHECK(r.census.size() == 11);
}

TEST_CASE("a warm database cuts the number of inner calls") {
  auto sl = enumerate_shapelist(2, Rat(2));

  BoundsDatabase db;
  OuterConfig warmup;
  warmup.initial_bound = Rat(2);
  warmup.db = &db;
  solve_outer(3, 2, sl, warmup);

  OuterConfig warm = warmup;  // same db, now populated
  RunReport with_db = solve_outer(4, 2, sl, warm);

  OuterConfig cold;
  cold.initial_bound = Rat(2);
  RunReport without_db = solve_outer(4, 2, sl, cold);

  CHECK(with_db.s_value == without_db.s_value);
  CHECK(census_keys(with_db) == census_keys(without_db));
  CHECK(with_db.inner_calls < without_db.inner_calls);
}

TEST_CASE("widths are monotone in k") {
  auto sl = enumerate_shapelist(2, Rat(2));
  BoundsDatabase db;
  Rat prev(0);
  for (int k = 1; k <= 4; ++k) {
    OuterConfig oc;
    oc.initial_bound = Rat(2);
    oc.db = &db;
    RunReport r = solve_outer(k, 2, sl, oc);
    CHECK(r.s_value >= prev);
    prev = r.s_value;
  }
}

TEST_CASE("census entries re-solve cold to the same width") {
  auto sl = enumerate_shapelist(2, Rat(2));
  OuterConfig oc;
  oc.initial_bound = Rat(2);
  RunReport r = solve_outer(3, 2, sl, oc);
  for (const auto& e : r.census) {
    std::vector<SimplexShape> shapes;
    for (int i : e.ms.idx) shapes.push_back(sl[static_cast<size_t>(i)]);
    InnerInstance inst;
    inst.dim = 2;
    inst.shapes = shapes;  // no cutoff: cold exact solve
    InnerResult res = solve_inner(inst);
    REQUIRE(res.status == InnerStatus::Optimal);
    CHECK(res.value == r.s_value);
  }
}

TEST_CASE("empty shapelist is rejected") {
  OuterConfig oc;
  oc.initial_bound = Rat(1);
  CHECK_THROWS_AS(solve_outer(1, 2, {}, oc), std::invalid_argument);
}
