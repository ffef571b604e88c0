#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "rootfp/e7.hpp"

using namespace rootfp;

static F3Code code(int a, int b, int c) { return F3Code{a, b, c}; }

TEST_CASE("gamma7 is the 27 codes with exactly one zero letter") {
  const auto& m = E7Model::instance();
  CHECK(m.gamma7().size() == 27);
  for (const auto& x : m.gamma7()) {
    int zeros = (x.a == 0) + (x.b == 0) + (x.c == 0);
    CHECK(zeros == 1);
  }
}

TEST_CASE("strata image sizes and shift vectors") {
  const auto& m = E7Model::instance();
  std::vector<std::pair<int, size_t>> sizes = {
      {1, 1}, {3, 3}, {4, 6}, {5, 10}, {6, 16}, {7, 27}};
  for (auto [s, n] : sizes) CHECK(m.gamma_plus(s).size() == n);

  CHECK(m.z(1) == code(2, 2, 0));
  CHECK(m.z(3) == code(1, 2, 0));
  CHECK(m.z(4) == code(0, 3, 1));
  CHECK(m.z(5) == code(0, 3, 2));
  CHECK(m.z(6) == code(0, 3, 3));
  CHECK(m.z(7) == code(0, 0, 0));
}

TEST_CASE("f is a bijection from the positive roots onto Gamma") {
  const auto& m = E7Model::instance();
  std::set<int> seen;
  for (const auto& b : m.e7().positive_roots()) {
    auto x = m.f(b);
    CHECK(x != code(0, 0, 0));
    seen.insert(f3_pack(x));
    const Root* back = m.root_of(x);
    REQUIRE(back != nullptr);
    CHECK(*back == b);
  }
  CHECK(seen.size() == 63);
}

TEST_CASE("link of 021 inside Gamma7+") {
  const auto& m = E7Model::instance();
  auto link = m.link(code(0, 2, 1));
  std::set<F3Code> in7;
  for (const auto& x : link)
    if (std::binary_search(m.gamma7().begin(), m.gamma7().end(), x))
      in7.insert(x);
  std::set<F3Code> expect = {code(0, 1, 2), code(0, 1, 3), code(0, 3, 2),
                             code(0, 3, 3), code(1, 0, 1), code(1, 2, 0),
                             code(2, 0, 1), code(2, 2, 0), code(3, 0, 1),
                             code(3, 2, 0)};
  CHECK(in7 == expect);
}

TEST_CASE("link and antilink partition the other 63 vertices") {
  const auto& m = E7Model::instance();
  for (int i = 0; i < 64; ++i) {
    auto v = f3_unpack(i);
    auto l = m.link(v);
    auto a = m.antilink(v);
    CHECK(l.size() == 27);
    CHECK(a.size() == 36);
    std::set<F3Code> all(l.begin(), l.end());
    all.insert(a.begin(), a.end());
    CHECK(all.size() == 63);
    CHECK(all.count(v) == 0);
  }
}

TEST_CASE("orthogonal pairs and triples in Gamma7+") {
  const auto& m = E7Model::instance();
  int pairs = 0;
  for (const auto& x : m.gamma7())
    for (const auto& y : m.gamma7())
      if (x < y && m.form(x, y) == 0) ++pairs;
  CHECK(pairs == 135);

  auto x1 = code(0, 1, 2);
  auto x2 = code(1, 0, 2);
  REQUIRE(m.form(x1, x2) == 0);
  auto x3 = m.orth_triple(x1, x2);
  CHECK(x3 == f3_xor(x1, x2));
  CHECK(m.form(x1, x3) == 0);
  CHECK(m.form(x2, x3) == 0);
  CHECK(std::binary_search(m.gamma7().begin(), m.gamma7().end(), x3));
}

TEST_CASE("cube layout places each vertex on the face of its zero letter") {
  const auto& m = E7Model::instance();
  std::set<std::tuple<int, int, int>> cells;
  for (const auto& x : m.gamma7()) {
    auto cell = m.cube_layout(x);
    CHECK(cell.face == (x.a == 0 ? 0 : x.b == 0 ? 1 : 2));
    CHECK(cell.row >= 0);
    CHECK(cell.row < 3);
    CHECK(cell.col >= 0);
    CHECK(cell.col < 3);
    cells.insert({cell.face, cell.row, cell.col});
  }
  CHECK(cells.size() == 27);
}

TEST_CASE("reflections of the E6 subsystem act on Gamma7+") {
  const auto& m = E7Model::instance();
  CHECK(m.e6_positive().size() == 36);
  for (const auto& alpha : m.e6_positive()) {
    auto perm = m.reflection_perm(alpha);
    int moved = 0;
    for (int i = 0; i < 27; ++i) {
      CHECK(perm[perm[i]] == i);  // involution
      if (perm[i] != i) ++moved;
    }
    CHECK(moved == 12);
  }
}

TEST_CASE("the 36 double sixes") {
  const auto& m = E7Model::instance();
  auto sixes = m.double_sixes();
  CHECK(sixes.size() == 36);
  for (const auto& ds : sixes) {
    // each six is totally non-adjacent in the T-graph among its own members
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j) {
        CHECK(!t_adjacent_f3(ds.first[i], ds.first[j]));
        CHECK(!t_adjacent_f3(ds.second[i], ds.second[j]));
      }
    // the reflection carries each six onto the other
    std::set<F3Code> second(ds.second.begin(), ds.second.end());
    std::set<F3Code> image;
    for (int i = 0; i < 6; ++i) image.insert(m.reflect(ds.alpha, ds.first[i]));
    CHECK(image == second);
  }
}

TEST_CASE("order steps inside a stratum match root addition") {
  const auto& m = E7Model::instance();
  const auto& rs = m.e7();
  auto pos = rs.stratum_positive(5);
  for (const auto& beta : pos) {
    for (const auto& alpha : rs.positive_roots()) {
      if (stratum(alpha) == 7) continue;
      Root sum(beta), diff(beta);
      for (size_t k = 0; k < beta.size(); ++k) {
        sum[k] += alpha[k];
        diff[k] -= alpha[k];
      }
      bool stays = (rs.is_positive_root(sum) && stratum(sum) == 5) ||
                   (rs.is_positive_root(diff) && stratum(diff) == 5);
      CHECK(m.order_step(5, m.f(beta), m.f(alpha)) == stays);
    }
  }
}

TEST_CASE("cross-stratum comparability through the lifts") {
  const auto& m = E7Model::instance();
  const auto& rs = m.e7();
  Root a3 = rs.simple_root(3);
  Root theta = rs.highest_root();
  auto cs = m.cross_stratum(a3, theta);
  CHECK(cs.comparable);
  auto cs2 = m.cross_stratum(theta, a3);
  CHECK(!cs2.comparable);
}
