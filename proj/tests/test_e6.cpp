#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "rootfp/e6.hpp"

using namespace rootfp;

TEST_CASE("f is a bijection from all 72 roots onto Gamma") {
  const auto& m = E6Model::instance();
  std::set<FpVec> seen;
  for (const auto& b : m.e6().all_roots()) {
    auto x = m.f(b);
    seen.insert(x);
    const Root* back = m.root_of(x);
    REQUIRE(back != nullptr);
    CHECK(*back == b);
  }
  auto gamma = m.gamma();
  CHECK(seen == std::set<FpVec>(gamma.begin(), gamma.end()));
}

TEST_CASE("gamma6 is the 16 all-nonzero vectors of coordinate product 1") {
  const auto& m = E6Model::instance();
  CHECK(m.gamma6().size() == 16);
  for (const auto& x : m.gamma6()) {
    int prod = 1;
    for (int c : x) {
      CHECK(c != 0);
      prod = prod * c % 3;
    }
    CHECK(prod == 1);
  }
  CHECK(m.f(m.e6().simple_root(6)) == FpVec{1, 1, 1, 1, 1});
}

TEST_CASE("strata image sizes") {
  const auto& m = E6Model::instance();
  std::vector<std::pair<int, size_t>> sizes = {
      {1, 1}, {3, 3}, {4, 6}, {5, 10}, {6, 16}};
  for (auto [s, n] : sizes) CHECK(m.gamma_plus(s).size() == n);
}

TEST_CASE("link of 11122 inside Gamma6+") {
  const auto& m = E6Model::instance();
  auto link = m.link_in_gamma6(FpVec{1, 1, 1, 2, 2});
  std::set<FpVec> got(link.begin(), link.end());
  std::set<FpVec> expect = {FpVec{1, 2, 2, 1, 1},
                            FpVec{2, 1, 2, 1, 1},
                            FpVec{2, 2, 1, 1, 1},
                            FpVec{2, 2, 2, 1, 2},
                            FpVec{2, 2, 2, 2, 1}};
  CHECK(got == expect);
}

TEST_CASE("every Gamma6+ vertex has 5 neighbours there") {
  const auto& m = E6Model::instance();
  for (const auto& x : m.gamma6()) CHECK(m.link_in_gamma6(x).size() == 5);
}

TEST_CASE("square layout is a bijection onto the 4x4 grid") {
  const auto& m = E6Model::instance();
  std::set<std::pair<int, int>> cells;
  for (const auto& x : m.gamma6()) {
    auto cell = m.square_layout(x);
    CHECK(cell.row >= 0);
    CHECK(cell.row < 4);
    CHECK(cell.col >= 0);
    CHECK(cell.col < 4);
    cells.insert({cell.row, cell.col});
  }
  CHECK(cells.size() == 16);
}

TEST_CASE("order steps inside a stratum match root addition") {
  const auto& m = E6Model::instance();
  const auto& rs = m.e6();
  for (int s : {4, 5}) {
    auto pos = rs.stratum_positive(s);
    for (const auto& beta : pos) {
      for (const auto& alpha : rs.positive_roots()) {
        Root sum(beta);
        for (size_t k = 0; k < beta.size(); ++k) sum[k] += alpha[k];
        bool stays = rs.is_positive_root(sum) && stratum(sum) == s;
        CHECK(m.order_step(s, m.f(beta), m.f(alpha)) == stays);
      }
    }
  }
}
