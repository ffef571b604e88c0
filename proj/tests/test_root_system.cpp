#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rootfp/root_system.hpp"

using namespace rootfp;

TEST_CASE("positive root counts") {
  CHECK(RootSystem::build(Family::A, 2).positive_roots().size() == 3);
  CHECK(RootSystem::build(Family::D, 4).positive_roots().size() == 12);
  CHECK(RootSystem::build(Family::E, 6).positive_roots().size() == 36);
  CHECK(RootSystem::build(Family::E, 7).positive_roots().size() == 63);
  CHECK(RootSystem::build(Family::E, 8).positive_roots().size() == 120);
}

TEST_CASE("cartan matrix follows the chain 1-3-4-...-n with branch 2-4") {
  auto rs = RootSystem::build(Family::E, 7);
  const auto& c = rs.cartan();
  CHECK(c[1][3] == -1);  // alpha_2 attaches at alpha_4
  CHECK(c[1][2] == 0);   // and not at alpha_3
  CHECK(c[0][2] == -1);  // alpha_1 - alpha_3
  CHECK(c[0][1] == 0);
  for (int i = 3; i < 6; ++i) CHECK(c[i][i + 1] == -1);
}

TEST_CASE("coefficientwise order and strata") {
  auto e8 = RootSystem::build(Family::E, 8);
  CHECK(leq({0, 0, 1, 0, 0, 0, 0, 0}, {1, 0, 1, 0, 0, 0, 0, 0}));
  CHECK(!leq({1, 0, 0, 0, 0, 0, 0, 0}, {0, 1, 1, 0, 0, 0, 0, 0}));
  CHECK(stratum({1, 0, 0, 0, 0, 0, 0, 0}) == 1);
  CHECK(stratum({0, 1, 0, 0, 0, 0, 0, 0}) == 3);  // alpha_2 joins at E3
  CHECK(stratum({1, 0, 1, 0, 0, 0, 0, 0}) == 3);
  CHECK(stratum({1, 1, 1, 1, 0, 0, 0, 0}) == 4);
  CHECK(stratum_next(1) == 3);
  CHECK(stratum_next(3) == 4);
  CHECK(stratum_next(7) == 8);

  std::vector<std::pair<int, size_t>> sizes = {{1, 1},  {3, 3},  {4, 6},
                                               {5, 10}, {6, 16}, {7, 27},
                                               {8, 57}};
  for (auto [s, n] : sizes) CHECK(e8.stratum_positive(s).size() == n);
}

TEST_CASE("highest root of E8") {
  auto e8 = RootSystem::build(Family::E, 8);
  CHECK(e8.highest_root() == Root{2, 3, 4, 6, 5, 4, 3, 2});
  CHECK(e8.lowest_root() == Root{-2, -3, -4, -6, -5, -4, -3, -2});
}

TEST_CASE("hasse graph of the three-element stratum") {
  auto e8 = RootSystem::build(Family::E, 8);
  auto g = e8.hasse(e8.stratum_positive(3));
  CHECK(g.vertices.size() == 3);
  // alpha_3 < alpha_1 + alpha_3 is the only cover; alpha_2 is isolated.
  CHECK(g.edges.size() == 1);
}

TEST_CASE("tilde lifts land in the top stratum") {
  auto e7 = RootSystem::build(Family::E, 7);
  for (const auto& b : e7.positive_roots()) {
    Root lift = e7.tilde(b);
    CHECK(e7.is_positive_root(lift));
    CHECK(stratum(lift) == 7);
  }
  CHECK(e7.zeta(6) == Root{0, 0, 0, 0, 0, 0, 1});
  CHECK(e7.zeta(1) == Root{0, 0, 1, 1, 1, 1, 1});
}

TEST_CASE("diagram twists permute the roots and preserve the form") {
  for (int rank : {6, 7}) {
    auto rs = RootSystem::build(Family::E, rank);
    for (int i = 3; i <= rank; ++i) {
      auto tw = rs.dynkin_twist(i);
      // The new simple system has the same Cartan matrix.
      for (int u = 0; u < rank; ++u)
        for (int v = 0; v < rank; ++v)
          CHECK(rs.inner(tw.new_simples[u], tw.new_simples[v]) ==
                rs.cartan()[u][v]);
      for (const auto& b : rs.all_roots()) CHECK(rs.is_root(tw.apply(b)));
    }
    CHECK_THROWS(rs.dynkin_twist(1));
    CHECK_THROWS(rs.dynkin_twist(2));
  }
}

TEST_CASE("root formatting") {
  CHECK(root_to_string({1, 0, 1, 2}) == "1012");
  CHECK(root_to_string({-1, 0, 1}) == "-1 0 1");
}
