#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "testutil.hpp"

using namespace sympack;
using namespace sympack::testutil;

namespace {

InnerInstance instance(std::vector<SimplexShape> shapes, int sym = 2) {
  InnerInstance inst;
  inst.dim = shapes.empty() ? 2 : shapes[0].dim();
  inst.shapes = std::move(shapes);
  inst.symmetry_type = sym;
  return inst;
}

}  // namespace

TEST_CASE("single standard simplex") {
  for (int dim : {2, 3}) {
    InnerResult res = solve_inner(instance({std_simplex(dim)}));
    REQUIRE(res.status == InnerStatus::Optimal);
    CHECK(res.value == Rat(1));
    CHECK(verify_packing({std_simplex(dim)}, res.placement));
  }
}

TEST_CASE("two standard triangles need side two") {
  std::vector<SimplexShape> shapes = {std_simplex(2), std_simplex(2)};
  InnerResult res = solve_inner(instance(shapes));
  REQUIRE(res.status == InnerStatus::Optimal);
  CHECK(res.value == Rat(2));
  CHECK(res.placement.s == Rat(2));
  CHECK(verify_packing(shapes, res.placement));

  BruteInner oracle = brute_inner(shapes);
  REQUIRE(oracle.feasible);
  CHECK(oracle.value == Rat(2));
}

TEST_CASE("empty multiset is rejected") {
  CHECK_THROWS_AS(solve_inner(InnerInstance{}), std::invalid_argument);
}

TEST_CASE("matches the assignment-enumeration oracle on pairs") {
  auto sl = enumerate_shapelist(2, Rat(2));
  for (size_t i = 0; i < sl.size(); ++i) {
    for (size_t j = i; j < sl.size(); ++j) {
      std::vector<SimplexShape> shapes = {sl[i], sl[j]};
      InnerResult res = solve_inner(instance(shapes));
      BruteInner oracle = brute_inner(shapes);
      REQUIRE(res.status == InnerStatus::Optimal);
      REQUIRE(oracle.feasible);
      CHECK(res.value == oracle.value);
      CHECK(verify_packing(shapes, res.placement));
      CHECK(verify_packing(shapes, oracle.placement));
    }
  }
}

TEST_CASE("matches the oracle on sampled triples") {
  auto sl = enumerate_shapelist(2, Rat(2));
  std::mt19937 rng(5);
  std::uniform_int_distribution<size_t> pick(0, sl.size() - 1);
  for (int trial = 0; trial < 12; ++trial) {
    std::vector<size_t> ids = {pick(rng), pick(rng), pick(rng)};
    std::sort(ids.begin(), ids.end());
    std::vector<SimplexShape> shapes = {sl[ids[0]], sl[ids[1]], sl[ids[2]]};
    InnerResult res = solve_inner(instance(shapes));
    BruteInner oracle = brute_inner(shapes);
    REQUIRE(res.status == InnerStatus::Optimal);
    CHECK(res.value == oracle.value);
    CHECK(verify_packing(shapes, res.placement));
  }
}

TEST_CASE("three copies plus the reflected triangle pack at side two") {
  SimplexShape t1 = std_simplex(2);
  SimplexShape t4 = canonicalize(make_shape2(0, 1, -1, 1));
  std::vector<SimplexShape> shapes = {t1, t1, t1, t4};
  InnerResult res = solve_inner(instance(shapes, 0));
  REQUIRE(res.status == InnerStatus::Optimal);
  CHECK(res.value == Rat(2));
  CHECK(verify_packing(shapes, res.placement));

  // Any relabeling of the three identical triangles is again an optimal
  // packing; with no symmetry breaking all 3! labelings are feasible.
  std::vector<size_t> perm = {0, 1, 2};
  int count = 0;
  do {
    Placement relabeled = res.placement;
    for (size_t i = 0; i < 3; ++i)
      relabeled.translations[i] = res.placement.translations[perm[i]];
    CHECK(verify_packing(shapes, relabeled));
    ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  CHECK(count == 6);
}

TEST_CASE("symmetry rows") {
  SimplexShape t1 = std_simplex(2);
  SimplexShape t2 = canonicalize(make_shape2(0, 1, 1, 1));

  SUBCASE("type 2 orders coordinate sums of adjacent identical shapes") {
    auto rows = symmetry_rows(instance({t1, t1}, 2));
    REQUIRE(rows.size() == 1);
    // x_1 + y_1 - x_2 - y_2 <= 0 over variables [s, x1, y1, x2, y2].
    CHECK(rows[0].rel == Rel::Le);
    CHECK(rows[0].rhs == Rat(0));
    CHECK(rows[0].coeffs[0] == Rat(0));
    CHECK(rows[0].coeffs[1] == Rat(1));
    CHECK(rows[0].coeffs[2] == Rat(1));
    CHECK(rows[0].coeffs[3] == Rat(-1));
    CHECK(rows[0].coeffs[4] == Rat(-1));
  }
  SUBCASE("type 1 orders first coordinates") {
    auto rows = symmetry_rows(instance({t1, t1, t1}, 1));
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].coeffs[1] == Rat(1));
    CHECK(rows[0].coeffs[3] == Rat(-1));
    CHECK(rows[0].coeffs[2] == Rat(0));
  }
  SUBCASE("distinct shapes are never bound") {
    CHECK(symmetry_rows(instance({t1, t2}, 2)).empty());
    CHECK(symmetry_rows(instance({t1, t2}, 1)).empty());
  }
  SUBCASE("type 0 emits nothing") {
    CHECK(symmetry_rows(instance({t1, t1}, 0)).empty());
  }
  SUBCASE("unknown type is rejected") {
    CHECK_THROWS_AS(symmetry_rows(instance({t1, t1}, 3)),
                    std::invalid_argument);
  }
}

TEST_CASE("symmetry type does not change the optimal value") {
  auto sl = enumerate_shapelist(2, Rat(2));
  std::mt19937 rng(9);
  std::uniform_int_distribution<size_t> pick(0, sl.size() - 1);
  std::uniform_int_distribution<int> msize(1, 3);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<SimplexShape> shapes;
    int m = msize(rng);
    for (int i = 0; i < m; ++i) shapes.push_back(sl[pick(rng)]);
    Rat v0 = solve_inner(instance(shapes, 0)).value;
    Rat v1 = solve_inner(instance(shapes, 1)).value;
    Rat v2 = solve_inner(instance(shapes, 2)).value;
    CHECK(v0 == v1);
    CHECK(v1 == v2);
  }
}

TEST_CASE("volume bound holds on solved instances") {
  auto sl = enumerate_shapelist(2, Rat(2));
  std::mt19937 rng(15);
  std::uniform_int_distribution<size_t> pick(0, sl.size() - 1);
  for (int trial = 0; trial < 8; ++trial) {
    std::vector<SimplexShape> shapes = {sl[pick(rng)], sl[pick(rng)]};
    InnerResult res = solve_inner(instance(shapes));
    REQUIRE(res.status == InnerStatus::Optimal);
    // m unit-volume shapes need s^n >= m.
    CHECK(res.value * res.value >= Rat(2));
  }
}

TEST_CASE("cutoff semantics: ties kept, exceedance certified") {
  std::vector<SimplexShape> shapes = {std_simplex(2), std_simplex(2)};

  InnerInstance tie = instance(shapes);
  tie.cutoff = Rat(2);
  InnerResult res = solve_inner(tie);
  REQUIRE(res.status == InnerStatus::Optimal);
  CHECK(res.value == Rat(2));

  InnerInstance low = instance(shapes);
  low.cutoff = Rat(3, 2);
  res = solve_inner(low);
  REQUIRE(res.status == InnerStatus::CutoffExceeded);
  CHECK(res.value > Rat(3, 2));
  CHECK(res.value <= Rat(2));  // a lower bound never exceeds the optimum
}

TEST_CASE("big-M values follow the bound formula") {
  Facet f;
  f.normal = IVec(2);

  f.normal << 1, 1;
  f.rhs = 1;
  CHECK(big_m_value(f, Rat(2)) == Rat(5));

  f.normal << -1, 0;
  f.rhs = 0;
  CHECK(big_m_value(f, Rat(3)) == Rat(3));

  f.normal << 1, -2;
  f.rhs = 2;
  CHECK(big_m_value(f, Rat(17, 6)) == Rat(21, 2));
}

TEST_CASE("big-M model census") {
  SimplexShape t1 = std_simplex(2);

  SUBCASE("single shape has no binaries") {
    BigMModel m1 = build_bigm_milp(instance({t1}), Rat(1));
    CHECK(m1.num_continuous() == 3);
    CHECK(m1.binary_vars.empty());
    CHECK(m1.rows.size() == 3);
  }
  SUBCASE("pair of standard triangles") {
    BigMModel m2 = build_bigm_milp(instance({t1, t1}), Rat(2));
    CHECK(m2.num_continuous() == 5);
    CHECK(m2.binary_vars.size() == 6);
    CHECK(m2.rows.size() == 13);
    CHECK(m2.var_names[0] == "s");
    CHECK(m2.var_names[1] == "x_1");
    CHECK(m2.var_names[2] == "y_1");
    CHECK(m2.var_names.back() == "z_1_2_6");
  }
  SUBCASE("census formula for identical shapes") {
    for (int m = 2; m <= 5; ++m) {
      std::vector<SimplexShape> shapes(static_cast<size_t>(m), t1);
      BigMModel model = build_bigm_milp(instance(shapes), Rat(m));
      int pairs = m * (m - 1) / 2;
      CHECK(model.num_continuous() == 1 + 2 * m);
      CHECK(static_cast<int>(model.binary_vars.size()) == 6 * pairs);
      CHECK(static_cast<int>(model.rows.size()) == 3 * m + 7 * pairs);
    }
  }
}

TEST_CASE("strip placement is always feasible") {
  auto sl = enumerate_shapelist(2, Rat(2));
  std::vector<SimplexShape> shapes = {sl[0], sl[3], sl[7]};
  Placement pl = strip_placement(shapes);
  CHECK(verify_packing(shapes, pl));
  Placement gapped = strip_placement(shapes, Rat(1));
  CHECK(verify_packing(shapes, gapped));
  CHECK(gapped.s == pl.s + Rat(2));
}

TEST_CASE("three-dimensional pairs solve exactly") {
  SimplexShape t = std_simplex(3);
  std::vector<SimplexShape> shapes = {t, t};
  InnerResult res = solve_inner(instance(shapes));
  REQUIRE(res.status == InnerStatus::Optimal);
  BruteInner oracle = brute_inner(shapes);
  CHECK(res.value == oracle.value);
  CHECK(res.value == Rat(2));
  CHECK(verify_packing(shapes, res.placement));
  CHECK(res.value * res.value * res.value >= Rat(2));
}

TEST_CASE("published eight-tetrahedron packing verifies at side two") {
  // Shapes and shifts read off the k = 8 packing figure.
  struct Entry {
    std::array<Int, 3> v1, v2, v3, shift;
  };
  std::vector<Entry> entries = {
      {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}, {0, 0, 1}},
      {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}, {1, 0, 0}},
      {{0, 0, 1}, {0, 1, 0}, {1, 0, 1}, {0, 0, 0}},
      {{0, 1, -1}, {0, 2, -1}, {1, 0, 0}, {0, 0, 1}},
      {{0, 1, 0}, {0, 2, -1}, {1, 0, 0}, {0, 0, 1}},
      {{0, 1, 0}, {1, 0, 0}, {1, 0, 1}, {0, 0, 0}},
      {{0, 1, 0}, {1, -1, 1}, {1, 0, 0}, {0, 1, 0}},
      {{1, -1, 0}, {1, -1, 1}, {1, 0, 0}, {0, 1, 0}},
  };
  std::vector<SimplexShape> shapes;
  Placement pl;
  pl.s = Rat(2);
  for (const auto& e : entries) {
    shapes.push_back(make_shape3(e.v1, e.v2, e.v3));
    RVec t = rvec_zero(3);
    for (int c = 0; c < 3; ++c) t[c] = Rat(e.shift[static_cast<size_t>(c)]);
    pl.translations.push_back(std::move(t));
  }
  CHECK(verify_packing(shapes, pl));
}
